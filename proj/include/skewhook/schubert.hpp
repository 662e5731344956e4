#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "skewhook/excited.hpp"
#include "skewhook/factorials.hpp"
#include "skewhook/partition.hpp"
#include "skewhook/rational.hpp"
#include "skewhook/tableaux.hpp"

namespace skewhook {

// one-line notation, w(i) is the image of i
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<long> one_line) : w_(std::move(one_line)) {
        std::vector<char> seen(w_.size(), 0);
        for (long x : w_) {
            if (x < 1 || x > static_cast<long>(w_.size()) || seen[x - 1])
                throw std::invalid_argument("Permutation: not a bijection on 1..n");
            seen[x - 1] = 1;
        }
    }

    static Permutation identity(long n) {
        std::vector<long> v(n);
        std::iota(v.begin(), v.end(), 1);
        return Permutation(std::move(v));
    }

    long size() const { return static_cast<long>(w_.size()); }
    long operator()(long i) const { return w_[i - 1]; }
    const std::vector<long>& one_line() const { return w_; }

    Permutation inverse() const {
        std::vector<long> v(w_.size());
        for (long i = 1; i <= size(); ++i) v[w_[i - 1] - 1] = i;
        return Permutation(std::move(v));
    }

    // (u * v)(i) = u(v(i))
    Permutation operator*(const Permutation& v) const {
        if (size() != v.size())
            throw std::domain_error("Permutation: composing different sizes");
        std::vector<long> r(w_.size());
        for (long i = 1; i <= size(); ++i) r[i - 1] = w_[v(i) - 1];
        return Permutation(std::move(r));
    }

    long length() const {
        long inv = 0;
        for (long i = 0; i < size(); ++i)
            for (long j = i + 1; j < size(); ++j)
                if (w_[i] > w_[j]) ++inv;
        return inv;
    }

    bool is_identity() const {
        for (long i = 1; i <= size(); ++i)
            if (w_[i - 1] != i) return false;
        return true;
    }

    std::string str() const {
        bool digits = size() <= 9;
        std::string s;
        for (long i = 0; i < size(); ++i) {
            if (i && !digits) s += ',';
            s += std::to_string(w_[i]);
        }
        return s;
    }

    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<long> w_;
};

inline Permutation parse_permutation(const std::string& s) {
    std::vector<long> v;
    if (s.find(',') == std::string::npos) {
        for (char ch : s) {
            if (ch < '1' || ch > '9')
                throw parse_error("parse_permutation: bad character in '" + s + "'");
            v.push_back(ch - '0');
        }
    } else {
        std::size_t pos = 0;
        while (pos < s.size()) {
            std::size_t next = s.find(',', pos);
            if (next == std::string::npos) next = s.size();
            try {
                v.push_back(std::stol(s.substr(pos, next - pos)));
            } catch (const std::exception&) {
                throw parse_error("parse_permutation: bad entry in '" + s + "'");
            }
            pos = next + 1;
        }
    }
    if (v.empty()) throw parse_error("parse_permutation: empty input");
    return Permutation(std::move(v));
}

// 1^c x w = 1 2 .. c (c+w_1) (c+w_2) ..
inline Permutation direct_sum(long c, const Permutation& w) {
    if (c < 0) throw std::domain_error("direct_sum: negative shift");
    std::vector<long> v;
    v.reserve(c + w.size());
    for (long i = 1; i <= c; ++i) v.push_back(i);
    for (long x : w.one_line()) v.push_back(c + x);
    return Permutation(std::move(v));
}

// w (x) 1^a replaces every 1 in the permutation matrix by an a x a identity block
inline Permutation kron(const Permutation& w, long a) {
    if (a < 1) throw std::domain_error("kron: block size must be positive");
    std::vector<long> v(w.size() * a);
    for (long i = 1; i <= w.size(); ++i)
        for (long r = 1; r <= a; ++r) v[(i - 1) * a + r - 1] = (w(i) - 1) * a + r;
    return Permutation(std::move(v));
}

struct PermDiagram {
    std::vector<Cell> cells;
    std::vector<Cell> essential;
};

inline PermDiagram rothe_diagram(const Permutation& w) {
    PermDiagram d;
    for (long j = 1; j <= w.size(); ++j)
        for (long i = 1; i < j; ++i)
            if (w(i) > w(j)) d.cells.push_back({i, w(j)});
    std::sort(d.cells.begin(), d.cells.end());
    if (static_cast<long>(d.cells.size()) != w.length())
        throw std::logic_error("rothe_diagram: cell count disagrees with length");
    auto in = [&](long i, long j) -> bool {
        return std::binary_search(d.cells.begin(), d.cells.end(), Cell{i, j});
    };
    for (const Cell& c : d.cells)
        if (!in(c.i + 1, c.j) && !in(c.i, c.j + 1) && !in(c.i + 1, c.j + 1))
            d.essential.push_back(c);
    return d;
}

struct PermClass {
    bool vexillary = false;   // 2143-avoiding
    bool avoid321 = false;
    bool dominant = false;    // 132-avoiding
    bool grassmannian = false;
};

inline PermClass classify(const Permutation& w) {
    long n = w.size();
    PermClass out;
    out.vexillary = true;
    for (long i = 1; i <= n && out.vexillary; ++i)
        for (long j = i + 1; j <= n && out.vexillary; ++j)
            for (long k = j + 1; k <= n && out.vexillary; ++k)
                for (long l = k + 1; l <= n; ++l)
                    if (w(j) < w(i) && w(i) < w(l) && w(l) < w(k)) {
                        out.vexillary = false;
                        break;
                    }
    out.avoid321 = true;
    for (long i = 1; i <= n && out.avoid321; ++i)
        for (long j = i + 1; j <= n && out.avoid321; ++j)
            for (long k = j + 1; k <= n; ++k)
                if (w(i) > w(j) && w(j) > w(k)) {
                    out.avoid321 = false;
                    break;
                }
    out.dominant = true;
    for (long i = 1; i <= n && out.dominant; ++i)
        for (long j = i + 1; j <= n && out.dominant; ++j)
            for (long k = j + 1; k <= n; ++k)
                if (w(i) < w(k) && w(k) < w(j)) {
                    out.dominant = false;
                    break;
                }
    long descents = 0;
    for (long i = 1; i < n; ++i)
        if (w(i) > w(i + 1)) ++descents;
    out.grassmannian = descents <= 1;
    return out;
}

// (shape, supershape): row lengths of the diagram sorted decreasingly, and the
// union of the i x j rectangles over the essential cells (i, j)
inline std::pair<Partition, Partition> vexillary_shapes(const Permutation& w) {
    if (!classify(w).vexillary)
        throw std::domain_error("vexillary_shapes: permutation is not vexillary");
    PermDiagram d = rothe_diagram(w);
    std::map<long, long> rows;
    long depth = 0;
    for (const Cell& c : d.cells) {
        ++rows[c.i];
        depth = std::max(depth, c.i);
    }
    std::vector<long> mu;
    for (const auto& [i, len] : rows) mu.push_back(len);
    std::sort(mu.rbegin(), mu.rend());
    std::vector<long> la(depth, 0);
    for (const Cell& c : d.essential)
        for (long r = 1; r <= c.i; ++r) la[r - 1] = std::max(la[r - 1], c.j);
    Partition mup(mu), lap(la);
    if (!lap.contains(mup))
        throw std::logic_error("vexillary_shapes: shape escapes the supershape");
    return {mup, lap};
}

// diagonals labeled right to left starting at 1; cells read row by row
inline std::vector<long> shape_word(const SkewShape& sh) {
    std::vector<long> word;
    long cmax = 0;
    for (const Cell& u : sh.cells()) cmax = std::max(cmax, u.j - u.i);
    for (const Cell& u : sh.cells()) word.push_back(cmax - (u.j - u.i) + 1);
    return word;
}

inline Permutation word_to_perm(const std::vector<long>& word, long n = 0) {
    for (long r : word) {
        if (r < 1) throw std::domain_error("word_to_perm: letters must be positive");
        n = std::max(n, r + 1);
    }
    std::vector<long> v(n);
    std::iota(v.begin(), v.end(), 1);
    for (long r : word) std::swap(v[r - 1], v[r]);
    Permutation w(std::move(v));
    if (w.length() != static_cast<long>(word.size()))
        throw std::domain_error("word_to_perm: word is not reduced");
    return w;
}

// smallest left descent first; for a 321-avoiding permutation this recovers
// the reading word of its skew shape
inline std::vector<long> lexmin_word(const Permutation& w) {
    std::vector<long> v = w.one_line(), pos(w.size() + 1), word;
    for (long i = 1; i <= w.size(); ++i) pos[v[i - 1]] = i;
    long remaining = w.length();
    while (remaining > 0) {
        for (long r = 1; r < w.size(); ++r)
            if (pos[r] > pos[r + 1]) {
                word.push_back(r);
                std::swap(v[pos[r] - 1], v[pos[r + 1] - 1]);
                std::swap(pos[r], pos[r + 1]);
                --remaining;
                break;
            }
    }
    return word;
}

// rows of the shape are the maximal runs descending by one in the reading word
inline SkewShape skewsh(const Permutation& w) {
    if (!classify(w).avoid321)
        throw std::domain_error("skewsh: permutation is not 321-avoiding");
    std::vector<long> word = lexmin_word(w);
    std::vector<std::pair<long, long>> runs;
    for (long r : word) {
        if (!runs.empty() && runs.back().second == r + 1)
            runs.back().second = r;
        else
            runs.push_back({r, r});
    }
    long cmax = 0;
    for (long i = 0; i < static_cast<long>(runs.size()); ++i)
        cmax = std::max(cmax, runs[i].first - (i + 1));
    std::vector<long> la, mu;
    for (long i = 0; i < static_cast<long>(runs.size()); ++i) {
        mu.push_back(cmax - runs[i].first + i + 1);
        la.push_back(cmax - runs[i].second + i + 2);
    }
    return SkewShape(Partition(la), Partition(mu));
}

struct ShapePerm {
    Permutation w;
    std::vector<long> word;
};

inline ShapePerm shape_perm_correspondence(const SkewShape& sh) {
    std::vector<long> word = shape_word(sh);
    return {word_to_perm(word), std::move(word)};
}

// streams every reduced word exactly once; returns the number visited
template <typename Visitor>
inline long reduced_words(const Permutation& w, Visitor&& visit,
                          long cap = 10'000'000) {
    std::vector<long> v = w.one_line(), pos(w.size() + 1), word;
    for (long i = 1; i <= w.size(); ++i) pos[v[i - 1]] = i;
    long remaining = w.length(), count = 0;
    auto rec = [&](auto&& self) -> void {
        if (remaining == 0) {
            if (++count > cap)
                throw resource_error("reduced_words: word cap exceeded");
            visit(const_cast<const std::vector<long>&>(word));
            return;
        }
        for (long r = 1; r < w.size(); ++r)
            if (pos[r] > pos[r + 1]) {
                std::swap(v[pos[r] - 1], v[pos[r + 1] - 1]);
                std::swap(pos[r], pos[r + 1]);
                word.push_back(r);
                --remaining;
                self(self);
                ++remaining;
                word.pop_back();
                std::swap(v[pos[r] - 1], v[pos[r + 1] - 1]);
                std::swap(pos[r], pos[r + 1]);
            }
    };
    rec(rec);
    return count;
}

inline std::vector<std::vector<long>> reduced_word_list(const Permutation& w,
                                                        long cap = 1'000'000) {
    std::vector<std::vector<long>> out;
    reduced_words(w, [&](const std::vector<long>& word) { out.push_back(word); },
                  cap);
    return out;
}

// sum of (c + r_1)...(c + r_l) over reduced words, by stripping left descents
inline Int macdonald_word_sum(const Permutation& w, long c = 0) {
    std::map<std::vector<long>, Int> memo;
    auto rec = [&](auto&& self, std::vector<long>& v) -> Int {
        auto it = memo.find(v);
        if (it != memo.end()) return it->second;
        std::vector<long> pos(v.size() + 1);
        for (long i = 1; i <= static_cast<long>(v.size()); ++i) pos[v[i - 1]] = i;
        Int total = 0;
        bool any = false;
        for (long r = 1; r < static_cast<long>(v.size()); ++r)
            if (pos[r] > pos[r + 1]) {
                any = true;
                std::swap(v[pos[r] - 1], v[pos[r + 1] - 1]);
                total += Int(c + r) * self(self, v);
                std::swap(v[pos[r] - 1], v[pos[r + 1] - 1]);
            }
        if (!any) total = 1;
        memo[v] = total;
        return total;
    };
    std::vector<long> v = w.one_line();
    return rec(rec, v);
}

enum class UpsilonMethod { macdonald, vexillary_excited, skew321 };

inline std::string upsilon_method_name(UpsilonMethod m) {
    switch (m) {
        case UpsilonMethod::macdonald: return "macdonald";
        case UpsilonMethod::vexillary_excited: return "excited";
        case UpsilonMethod::skew321: return "skew321";
    }
    throw std::domain_error("upsilon_method_name: unknown method");
}

inline UpsilonMethod parse_upsilon_method(const std::string& s) {
    if (s == "macdonald") return UpsilonMethod::macdonald;
    if (s == "excited") return UpsilonMethod::vexillary_excited;
    if (s == "skew321") return UpsilonMethod::skew321;
    throw std::domain_error("parse_upsilon_method: unknown method '" + s + "'");
}

inline UpsilonMethod pick_upsilon_method(const Permutation& w) {
    PermClass cls = classify(w);
    if (cls.vexillary) return UpsilonMethod::vexillary_excited;
    if (cls.avoid321) return UpsilonMethod::skew321;
    return UpsilonMethod::macdonald;
}

inline Int upsilon(const Permutation& w,
                   UpsilonMethod method = UpsilonMethod::macdonald) {
    switch (method) {
        case UpsilonMethod::macdonald: {
            Rat total(macdonald_word_sum(w));
            total /= Rat(factorial(w.length()));
            return rat_to_int(total, "upsilon");
        }
        case UpsilonMethod::vexillary_excited: {
            auto [mu, la] = vexillary_shapes(w);
            return count_excited(SkewShape(la, mu), CountMethod::determinant);
        }
        case UpsilonMethod::skew321: {
            SkewShape sh = skewsh(w);
            Int prod(1);
            for (long r : lexmin_word(w)) prod *= r;
            Rat total(prod * syt_count_det(sh));
            total /= Rat(factorial(w.length()));
            return rat_to_int(total, "upsilon");
        }
    }
    throw std::domain_error("upsilon: unknown method");
}

inline Int upsilon_shifted(const Permutation& w, long c) {
    if (c < 0) throw std::domain_error("upsilon_shifted: negative shift");
    Rat total(macdonald_word_sum(w, c));
    total /= Rat(factorial(w.length()));
    return rat_to_int(total, "upsilon_shifted");
}

// supershape of 1^c x w for a dominant w of shape mu
inline Partition diamond_shape(long c, const Partition& mu) {
    if (c < 0) throw std::domain_error("diamond_shape: negative bound");
    std::vector<long> la(c, c + mu.part(1));
    for (long i = 1; i <= mu.length(); ++i) la.push_back(c + mu.part(i));
    return Partition(la);
}

inline Int upsilon_dominant(const Permutation& w, long c) {
    PermClass cls = classify(w);
    if (!cls.dominant)
        throw std::domain_error("upsilon_dominant: permutation is not dominant");
    return rpp_bounded_count(vexillary_shapes(w).first, c);
}

enum class PermFamily {
    w0,          // n .. 2 1
    box,         // u(a, b) = (b+1) .. (a+b) 1 .. b, diagram is the a x b box
    v2413,       // 2413 (x) 1^a
    schub,       // w(a) = a+1 .. 2a-1, 2a+1, 1 .. a-1, 2a, a
    s351624,     // 351624 (x) 1^a
    dewitt,      // reading-word permutation of the staircase delta_{4a} minus a^a
    doublefact,  // 2 1 4 3 .. (2n) (2n-1)
    x,           // reading-word permutation of the two-row zigzag
    y,           // three-row zigzag
    z            // five-row zigzag
};

inline std::string perm_family_name(PermFamily k) {
    switch (k) {
        case PermFamily::w0: return "w0";
        case PermFamily::box: return "u";
        case PermFamily::v2413: return "v";
        case PermFamily::schub: return "w";
        case PermFamily::s351624: return "s";
        case PermFamily::dewitt: return "t";
        case PermFamily::doublefact: return "doublefact";
        case PermFamily::x: return "x";
        case PermFamily::y: return "y";
        case PermFamily::z: return "z";
    }
    throw std::domain_error("perm_family_name: unknown family");
}

inline PermFamily parse_perm_family(const std::string& s) {
    if (s == "w0") return PermFamily::w0;
    if (s == "u") return PermFamily::box;
    if (s == "v") return PermFamily::v2413;
    if (s == "w") return PermFamily::schub;
    if (s == "s") return PermFamily::s351624;
    if (s == "t") return PermFamily::dewitt;
    if (s == "doublefact") return PermFamily::doublefact;
    if (s == "x") return PermFamily::x;
    if (s == "y") return PermFamily::y;
    if (s == "z") return PermFamily::z;
    throw std::domain_error("parse_perm_family: unknown family '" + s + "'");
}

inline Permutation family(PermFamily kind, long n, long b = 0) {
    if (n < 1) throw std::domain_error("family: parameter must be positive");
    switch (kind) {
        case PermFamily::w0: {
            std::vector<long> v(n);
            for (long i = 0; i < n; ++i) v[i] = n - i;
            return Permutation(std::move(v));
        }
        case PermFamily::box: {
            if (b < 1) throw std::domain_error("family: box needs two parameters");
            std::vector<long> v;
            for (long i = b + 1; i <= n + b; ++i) v.push_back(i);
            for (long i = 1; i <= b; ++i) v.push_back(i);
            return Permutation(std::move(v));
        }
        case PermFamily::v2413: return kron(Permutation({2, 4, 1, 3}), n);
        case PermFamily::schub: {
            std::vector<long> v;
            for (long i = n + 1; i <= 2 * n - 1; ++i) v.push_back(i);
            v.push_back(2 * n + 1);
            for (long i = 1; i <= n - 1; ++i) v.push_back(i);
            v.push_back(2 * n);
            v.push_back(n);
            return Permutation(std::move(v));
        }
        case PermFamily::s351624: return kron(Permutation({3, 5, 1, 6, 2, 4}), n);
        case PermFamily::dewitt: {
            Partition la = Partition::staircase(4 * n);
            Partition mu(std::vector<long>(n, n));
            return shape_perm_correspondence(SkewShape(la, mu)).w;
        }
        case PermFamily::doublefact: {
            std::vector<long> v(2 * n);
            for (long i = 0; i < n; ++i) {
                v[2 * i] = 2 * i + 2;
                v[2 * i + 1] = 2 * i + 1;
            }
            return Permutation(std::move(v));
        }
        case PermFamily::x: {
            SkewShape sh(Partition::staircase(n + 2), Partition::staircase(n));
            return shape_perm_correspondence(sh).w;
        }
        case PermFamily::y: {
            std::vector<long> la{n + 1, n + 1};
            for (long i = n; i >= 2; --i) la.push_back(i);
            SkewShape sh(Partition(la), Partition::staircase(n));
            return shape_perm_correspondence(sh).w;
        }
        case PermFamily::z: {
            std::vector<long> la{n + 2, n + 2, n + 2};
            for (long i = n + 1; i >= 3; --i) la.push_back(i);
            SkewShape sh(Partition(la), Partition::staircase(n));
            return shape_perm_correspondence(sh).w;
        }
    }
    throw std::domain_error("family: unknown family");
}

inline Rat proctor_product(long n, long c) {
    Rat val(1);
    for (long i = 1; i < n; ++i)
        for (long j = i + 1; j <= n; ++j) {
            Rat f(2 * c + i + j - 1, i + j - 1);
            f.canonicalize();
            val *= f;
        }
    return val;
}

enum class UpsilonForm {
    staircase,      // w0(n) shifted by c
    box,            // u(a, b) shifted by c
    rest2413,       // v(a) shifted by c, needs c >= a
    schubperm,      // w(a) shifted by c
    zigzag,         // doublefact(n)
    zigzag_blocks,  // doublefact(n) (x) 1^a
    x,
    y,
    z,
    s351624,
    dewitt
};

inline std::string upsilon_form_name(UpsilonForm k) {
    switch (k) {
        case UpsilonForm::staircase: return "staircase";
        case UpsilonForm::box: return "box";
        case UpsilonForm::rest2413: return "rest2413";
        case UpsilonForm::schubperm: return "schubperm";
        case UpsilonForm::zigzag: return "zigzag";
        case UpsilonForm::zigzag_blocks: return "zigzag_blocks";
        case UpsilonForm::x: return "x";
        case UpsilonForm::y: return "y";
        case UpsilonForm::z: return "z";
        case UpsilonForm::s351624: return "s351624";
        case UpsilonForm::dewitt: return "dewitt";
    }
    throw std::domain_error("upsilon_form_name: unknown form");
}

inline UpsilonForm parse_upsilon_form(const std::string& s) {
    if (s == "staircase") return UpsilonForm::staircase;
    if (s == "box") return UpsilonForm::box;
    if (s == "rest2413") return UpsilonForm::rest2413;
    if (s == "schubperm") return UpsilonForm::schubperm;
    if (s == "zigzag") return UpsilonForm::zigzag;
    if (s == "zigzag_blocks") return UpsilonForm::zigzag_blocks;
    if (s == "x") return UpsilonForm::x;
    if (s == "y") return UpsilonForm::y;
    if (s == "z") return UpsilonForm::z;
    if (s == "s351624") return UpsilonForm::s351624;
    if (s == "dewitt") return UpsilonForm::dewitt;
    throw std::domain_error("parse_upsilon_form: unknown form '" + s + "'");
}

inline Int upsilon_closed_form(UpsilonForm kind, long p1, long p2 = 0,
                               long p3 = 0) {
    if (p1 < 1 || p2 < 0 || p3 < 0)
        throw std::domain_error("upsilon_closed_form: parameter out of range");
    switch (kind) {
        case UpsilonForm::staircase: {
            long n = p1, c = p2;
            Rat val(superfactorial(2 * c + 2 * n - 1) * superfactorial(n) *
                    double_superfactorial(2 * c + 1) *
                    double_superfactorial(2 * n - 1));
            val /= superfactorial(n + 2 * c) * superfactorial(2 * n - 1) *
                   double_superfactorial(2 * c + 2 * n - 1);
            return rat_to_int(val, "upsilon_closed_form");
        }
        case UpsilonForm::box: {
            long a = p1, b = p2, c = p3;
            if (b < 1) throw std::domain_error("upsilon_closed_form: box needs b");
            Rat val(superfactorial(a + b + c) * superfactorial(a) *
                    superfactorial(b) * superfactorial(c));
            val /= superfactorial(a + b) * superfactorial(b + c) *
                   superfactorial(a + c);
            return rat_to_int(val, "upsilon_closed_form");
        }
        case UpsilonForm::rest2413: {
            long a = p1, c = p2;
            if (c < a)
                throw std::domain_error("upsilon_closed_form: rest2413 needs c >= a");
            // the superfactorial of 2a enters cubed; the squared variant
            // overcounts by a factor of Phi(2a) starting at a = 2
            Rat val(superfactorial(4 * a + c) * superfactorial(c) *
                    pow_int(superfactorial(a), 4) *
                    pow_int(superfactorial(3 * a), 2));
            val /= superfactorial(3 * a + c) * superfactorial(a + c) *
                   pow_int(superfactorial(2 * a), 3) * superfactorial(4 * a);
            return rat_to_int(val, "upsilon_closed_form");
        }
        case UpsilonForm::schubperm: {
            long a = p1, c = p2;
            // dividing by the superfactorial of 2a - 1 alone leaves a stray
            // factor of (2a - 1)! starting at a = 2
            Rat val(superfactorial(2 * a + c) * pow_int(superfactorial(a), 2) *
                    superfactorial(c));
            val /= pow_int(superfactorial(a + c), 2) * superfactorial(2 * a);
            Rat tail(a * (2 * a + c) * (2 * a * c + 4 * a * a - 1),
                     2 * (4 * a * a - 1));
            tail.canonicalize();
            return rat_to_int(val * tail, "upsilon_closed_form");
        }
        case UpsilonForm::zigzag: return double_factorial(2 * p1 - 1);
        case UpsilonForm::zigzag_blocks: {
            long n = p1, a = p2;
            if (a < 1)
                throw std::domain_error("upsilon_closed_form: zigzag_blocks needs a");
            Rat val(superfactorial(2 * n * a) *
                    pow_int(superfactorial(a), 2 * n - 2));
            val /= pow_int(superfactorial(2 * a), n);
            for (long k = 1; k < n; ++k) {
                Rat f(pow_int(superfactorial(2 * k * a), 2));
                f /= pow_int(superfactorial((2 * k + 1) * a), 2);
                val *= f;
            }
            return rat_to_int(val, "upsilon_closed_form");
        }
        case UpsilonForm::x: return euler_number(2 * p1 + 1);
        case UpsilonForm::y: {
            Rat val(factorial(p1) * euler_number(2 * p1 + 1));
            val /= pow_int(Int(2), p1);
            return rat_to_int(val, "upsilon_closed_form");
        }
        case UpsilonForm::z: {
            long n = p1;
            Rat val(Int(n + 1) * factorial(2 * n + 3) *
                    pow_int(euler_number(2 * n + 1), 2));
            val /= factorial(n) * pow_int(Int(2), 5 * n + 1) *
                   (pow_int(Int(2), 2 * n + 2) - 1);
            return rat_to_int(val, "upsilon_closed_form");
        }
        case UpsilonForm::s351624: {
            long a = p1;
            Rat val(pow_int(superfactorial(a), 5) *
                    pow_int(superfactorial(3 * a), 2) * superfactorial(5 * a));
            val /= pow_int(superfactorial(2 * a), 4) *
                   pow_int(superfactorial(4 * a), 2);
            return rat_to_int(val, "upsilon_closed_form");
        }
        case UpsilonForm::dewitt: {
            long a = p1;
            // the superfactorial of 2a enters cubed; the squared variant
            // overcounts by a factor of Phi(2a) starting at a = 2
            Rat val(pow_int(superfactorial(a), 3) * superfactorial(3 * a) *
                    superfactorial(4 * a - 1) * superfactorial(8 * a - 2) *
                    super_doublefactorial(a) * super_doublefactorial(3 * a));
            val /= pow_int(superfactorial(2 * a), 3) * superfactorial(3 * a - 1) *
                   superfactorial(5 * a - 1) *
                   pow_int(super_doublefactorial(2 * a), 2) *
                   super_doublefactorial(4 * a) * double_superfactorial(8 * a - 2);
            return rat_to_int(val, "upsilon_closed_form");
        }
    }
    throw std::domain_error("upsilon_closed_form: unknown form");
}

}  // namespace skewhook
