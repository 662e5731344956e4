#pragma once

#include "skewhook/rational.hpp"

#include <algorithm>
#include <cctype>
#include <compare>
#include <string>
#include <vector>

namespace skewhook {

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Cell {
    long i, j;  // 1-indexed (row, col)
    auto operator<=>(const Cell&) const = default;
};

inline long content(const Cell& c) { return c.j - c.i; }

class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<long> parts) : p_(parts) { normalize(); }
    explicit Partition(std::vector<long> parts) : p_(std::move(parts)) { normalize(); }

    long length() const { return static_cast<long>(p_.size()); }
    long size() const {
        long s = 0;
        for (long v : p_) s += v;
        return s;
    }
    bool empty() const { return p_.empty(); }
    // 1-indexed with zero padding beyond the last row
    long part(long i) const {
        if (i < 1) throw std::domain_error("Partition::part: index below 1");
        return i <= length() ? p_[i - 1] : 0;
    }
    const std::vector<long>& parts() const { return p_; }

    Partition conjugate() const {
        std::vector<long> q;
        if (!p_.empty()) {
            q.resize(p_[0]);
            for (long j = 1; j <= p_[0]; ++j) {
                long cnt = 0;
                while (cnt < length() && p_[cnt] >= j) ++cnt;
                q[j - 1] = cnt;
            }
        }
        return Partition(std::move(q));
    }

    bool contains(const Partition& mu) const {
        if (mu.length() > length()) return false;
        for (long i = 1; i <= mu.length(); ++i)
            if (mu.part(i) > part(i)) return false;
        return true;
    }

    bool contains_cell(long i, long j) const { return i >= 1 && j >= 1 && j <= part(i); }

    std::vector<Cell> cells() const {
        std::vector<Cell> out;
        for (long i = 1; i <= length(); ++i)
            for (long j = 1; j <= part(i); ++j) out.push_back({i, j});
        return out;
    }

    static Partition staircase(long n) {
        std::vector<long> p;
        for (long v = n - 1; v >= 1; --v) p.push_back(v);
        return Partition(std::move(p));
    }

    std::string str() const {
        std::string s = "[";
        for (size_t k = 0; k < p_.size(); ++k) {
            if (k) s += ",";
            s += std::to_string(p_[k]);
        }
        return s + "]";
    }

    auto operator<=>(const Partition&) const = default;

private:
    void normalize() {
        for (size_t k = 0; k < p_.size(); ++k) {
            if (p_[k] < 0)
                throw std::invalid_argument("Partition: negative part");
            if (k > 0 && p_[k] > p_[k - 1])
                throw std::invalid_argument("Partition: parts must be weakly decreasing");
        }
        while (!p_.empty() && p_.back() == 0) p_.pop_back();
    }

    std::vector<long> p_;
};

inline long hook_length(const Partition& la, long i, long j) {
    if (!la.contains_cell(i, j))
        throw std::domain_error("hook_length: cell outside the partition");
    return la.part(i) - i + la.conjugate().part(j) - j + 1;
}

// D_c(mu): number of cells of mu on the diagonal j - i = c
inline long diag_cells(const Partition& mu, long c) {
    long n = 0;
    for (long i = std::max(1L, 1 - c); i <= mu.length(); ++i)
        if (mu.part(i) >= i + c) ++n;
    return n;
}

class SkewShape {
public:
    SkewShape() = default;
    explicit SkewShape(Partition outer) : out_(std::move(outer)) {}
    SkewShape(Partition outer, Partition inner)
        : out_(std::move(outer)), in_(std::move(inner)) {
        if (!out_.contains(in_))
            throw std::invalid_argument("SkewShape: inner shape not contained in outer");
    }

    const Partition& outer() const { return out_; }
    const Partition& inner() const { return in_; }
    long size() const { return out_.size() - in_.size(); }

    bool contains(long i, long j) const {
        if (i < 1 || i > out_.length()) return false;
        return j > in_.part(i) && j <= out_.part(i);
    }

    std::vector<Cell> cells() const {
        std::vector<Cell> out;
        for (long i = 1; i <= out_.length(); ++i)
            for (long j = in_.part(i) + 1; j <= out_.part(i); ++j) out.push_back({i, j});
        return out;
    }

    bool connected() const {
        std::vector<Cell> cs = cells();
        if (cs.empty()) return true;
        std::vector<int> comp(cs.size(), 0);
        std::vector<size_t> stack{0};
        comp[0] = 1;
        while (!stack.empty()) {
            size_t k = stack.back();
            stack.pop_back();
            for (size_t t = 0; t < cs.size(); ++t) {
                if (comp[t]) continue;
                long di = cs[k].i - cs[t].i, dj = cs[k].j - cs[t].j;
                if (std::abs(di) + std::abs(dj) == 1) {
                    comp[t] = 1;
                    stack.push_back(t);
                }
            }
        }
        return std::all_of(comp.begin(), comp.end(), [](int v) { return v == 1; });
    }

    // contained in the d x (outer_d + d - 1) rectangle picture: outer has d rows
    // and its last row reaches past inner_1 + d - 1
    bool slim() const {
        long d = out_.length();
        if (d == 0) return true;
        return out_.part(d) >= in_.part(1) + d - 1;
    }

    std::string str() const {
        return in_.empty() ? out_.str() : out_.str() + "/" + in_.str();
    }

    auto operator<=>(const SkewShape&) const = default;

private:
    Partition out_, in_;
};

// Shape literal: "[3,3,2]" or "[3,3,2]/[2,1]", whitespace-insensitive.
inline SkewShape parse_shape(const std::string& text) {
    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto fail = [&](const std::string& what) -> void {
        throw parse_error("shape literal: " + what + " at position " + std::to_string(pos));
    };
    auto parse_list = [&]() -> Partition {
        skip_ws();
        if (pos >= text.size() || text[pos] != '[') fail("expected '['");
        ++pos;
        std::vector<long> parts;
        skip_ws();
        if (pos < text.size() && text[pos] == ']') {
            ++pos;
            return Partition(parts);
        }
        while (true) {
            skip_ws();
            size_t start = pos;
            if (pos < text.size() && text[pos] == '-') ++pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos == start || (text[start] == '-' && pos == start + 1)) fail("expected integer");
            long v = std::stol(text.substr(start, pos - start));
            if (v < 0) {
                pos = start;
                fail("negative part");
            }
            if (!parts.empty() && v > parts.back()) {
                pos = start;
                fail("parts must be weakly decreasing");
            }
            parts.push_back(v);
            skip_ws();
            if (pos < text.size() && text[pos] == ',') {
                ++pos;
                continue;
            }
            if (pos < text.size() && text[pos] == ']') {
                ++pos;
                return Partition(parts);
            }
            fail("expected ',' or ']'");
        }
    };

    Partition outer = parse_list();
    skip_ws();
    Partition inner;
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        inner = parse_list();
        skip_ws();
    }
    if (pos != text.size()) fail("trailing characters");
    if (!outer.contains(inner))
        throw parse_error("shape literal: inner shape not contained in outer");
    return SkewShape(outer, inner);
}

inline std::vector<Partition> all_partitions(long n) {
    std::vector<Partition> out;
    std::vector<long> cur;
    auto rec = [&](auto&& self, long rem, long maxpart) -> void {
        if (rem == 0) {
            out.push_back(Partition(cur));
            return;
        }
        for (long v = std::min(rem, maxpart); v >= 1; --v) {
            cur.push_back(v);
            self(self, rem - v, v);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

inline std::vector<Partition> sub_partitions(const Partition& la) {
    std::vector<Partition> out;
    std::vector<long> cur;
    auto rec = [&](auto&& self, long row, long cap) -> void {
        if (row > la.length()) {
            out.push_back(Partition(cur));
            return;
        }
        for (long v = 0; v <= std::min(cap, la.part(row)); ++v) {
            if (v > 0) cur.push_back(v);
            self(self, row + 1, v > 0 ? v : 0);
            if (v > 0) cur.pop_back();
        }
    };
    rec(rec, 1, la.part(1));
    return out;
}

}  // namespace skewhook
