#pragma once

#include "skewhook/matrix.hpp"
#include "skewhook/partition.hpp"
#include "skewhook/qpoly.hpp"
#include "skewhook/rational.hpp"

#include <map>
#include <vector>

namespace skewhook {

inline Int hlf_count(const Partition& la) {
    Int h = 1;
    Partition conj = la.conjugate();
    for (long i = 1; i <= la.length(); ++i)
        for (long j = 1; j <= la.part(i); ++j)
            h *= la.part(i) - i + conj.part(j) - j + 1;
    Rat f = Rat(factorial(la.size())) / Rat(h);
    return rat_to_int(f, "hlf_count");
}

// Linear-extension count by peeling removable corners, memoized on the
// intermediate shape between inner and outer.
inline Int syt_count_backtrack(const SkewShape& sh, long bound = 20) {
    if (sh.size() > bound)
        throw resource_error("syt_count_backtrack: shape above the configured bound");
    const Partition& mu = sh.inner();
    std::map<std::vector<long>, Int> memo;
    auto count = [&](auto&& self, const std::vector<long>& nu) -> Int {
        auto it = memo.find(nu);
        if (it != memo.end()) return it->second;
        Int total = 0;
        bool at_inner = true;
        for (size_t r = 0; r < nu.size(); ++r)
            if (nu[r] > mu.part(static_cast<long>(r) + 1)) at_inner = false;
        if (at_inner) {
            total = 1;
        } else {
            for (size_t r = 0; r < nu.size(); ++r) {
                long below = (r + 1 < nu.size()) ? nu[r + 1] : 0;
                if (nu[r] > mu.part(static_cast<long>(r) + 1) && nu[r] > below) {
                    std::vector<long> next = nu;
                    next[r] -= 1;
                    while (!next.empty() && next.back() == 0) next.pop_back();
                    total += self(self, next);
                }
            }
        }
        memo.emplace(nu, total);
        return total;
    };
    return count(count, sh.outer().parts());
}

// n! det[ 1/(lambda_i - mu_j - i + j)! ]
inline Int syt_count_det(const SkewShape& sh) {
    long l = sh.outer().length();
    RationalMatrix m(l, l);
    for (long i = 1; i <= l; ++i)
        for (long j = 1; j <= l; ++j) {
            long k = sh.outer().part(i) - sh.inner().part(j) - i + j;
            m.at(i - 1, j - 1) = k < 0 ? Rat(0) : Rat(1, factorial(k));
        }
    Rat f = Rat(factorial(sh.size())) * det_exact(m);
    return rat_to_int(f, "syt_count_det");
}

enum class SytMethod { backtrack, determinant };

inline Int syt_count_oracle(const SkewShape& sh, SytMethod method, long bound = 20) {
    return method == SytMethod::backtrack ? syt_count_backtrack(sh, bound)
                                          : syt_count_det(sh);
}

// Coefficients of s_{lambda/mu}(1,q,q^2,...) through q^D by enumerating SSYT
// with entries <= D+1 (an entry v contributes q^{v-1}).
inline QSeries ssyt_series_oracle(const SkewShape& sh, long D, long max_cells = 64) {
    if (sh.size() > max_cells)
        throw resource_error("ssyt_series_oracle: shape above the configured bound");
    QSeries out(D);
    std::vector<Cell> cs = sh.cells();
    std::vector<long> val(cs.size(), 0);
    auto at = [&](long i, long j) -> long {
        for (size_t k = 0; k < cs.size(); ++k)
            if (cs[k].i == i && cs[k].j == j) return val[k];
        return 0;
    };
    auto rec = [&](auto&& self, size_t k, long expo) -> void {
        if (k == cs.size()) {
            out[expo] += 1;
            return;
        }
        long lo = 1;
        if (sh.contains(cs[k].i, cs[k].j - 1)) lo = std::max(lo, at(cs[k].i, cs[k].j - 1));
        if (sh.contains(cs[k].i - 1, cs[k].j)) lo = std::max(lo, at(cs[k].i - 1, cs[k].j) + 1);
        for (long v = lo; v <= D + 1 && expo + v - 1 <= D; ++v) {
            val[k] = v;
            self(self, k + 1, expo + v - 1);
        }
        val[k] = 0;
    };
    rec(rec, 0, 0);
    return out;
}

// |PP(a,b,c)| via the box product formula
inline Int box_count(long a, long b, long c) {
    if (a < 0 || b < 0 || c < 0) throw std::domain_error("box_count: negative side");
    Rat r = 1;
    for (long i = 1; i <= a; ++i)
        for (long j = 1; j <= b; ++j)
            for (long k = 1; k <= c; ++k)
                r *= Rat(i + j + k - 1, i + j + k - 2);
    return rat_to_int(r, "box_count");
}

// Volume generating polynomial over RPP(a,b,c)
inline QPolynomial box_qgf(long a, long b, long c) {
    if (a < 0 || b < 0 || c < 0) throw std::domain_error("box_qgf: negative side");
    QPolynomial num(1), den(1);
    for (long i = 1; i <= a; ++i)
        for (long j = 1; j <= b; ++j)
            for (long k = 1; k <= c; ++k) {
                num *= QPolynomial::one_minus_q(i + j + k - 1);
                if (i + j + k > 2) den *= QPolynomial::one_minus_q(i + j + k - 2);
            }
    return num.divide_exact(den);
}

enum class BoxMode { count, qgf };

// Direct enumeration oracle: a x b arrays, entries in [0,c], weakly increasing
// along rows and columns, q^{sum of entries}.
inline QPolynomial rpp_box_qgf_enumerate(long a, long b, long c) {
    QPolynomial out;
    std::vector<std::vector<long>> m(a + 1, std::vector<long>(b + 1, 0));
    auto rec = [&](auto&& self, long i, long j, long vol) -> void {
        if (i == a + 1) {
            out += QPolynomial::monomial(Int(1), vol);
            return;
        }
        long ni = (j == b) ? i + 1 : i, nj = (j == b) ? 1 : j + 1;
        long lo = std::max(j > 1 ? m[i][j - 1] : 0, i > 1 ? m[i - 1][j] : 0);
        for (long v = lo; v <= c; ++v) {
            m[i][j] = v;
            self(self, ni, nj, vol + v);
        }
        m[i][j] = 0;
    };
    if (a == 0 || b == 0) return QPolynomial(1);
    rec(rec, 1, 1, 0);
    return out;
}

// RPP of shape mu with entries in {0..c}
inline Int rpp_bounded_count(const Partition& mu, long c) {
    if (c < 0) throw std::domain_error("rpp_bounded_count: negative bound");
    std::vector<Cell> cs = mu.cells();
    std::vector<long> val(cs.size(), 0);
    auto at = [&](long i, long j) -> long {
        for (size_t k = 0; k < cs.size(); ++k)
            if (cs[k].i == i && cs[k].j == j) return val[k];
        return 0;
    };
    Int total = 0;
    auto rec = [&](auto&& self, size_t k) -> void {
        if (k == cs.size()) {
            total += 1;
            return;
        }
        long lo = 0;
        if (mu.contains_cell(cs[k].i, cs[k].j - 1)) lo = std::max(lo, at(cs[k].i, cs[k].j - 1));
        if (mu.contains_cell(cs[k].i - 1, cs[k].j)) lo = std::max(lo, at(cs[k].i - 1, cs[k].j));
        for (long v = lo; v <= c; ++v) {
            val[k] = v;
            self(self, k + 1);
        }
        val[k] = 0;
    };
    rec(rec, 0);
    return total;
}

// Plane partitions of base mu (entries weakly decreasing along rows and
// columns) with entries in {0..d}; volume generating polynomial.
inline QPolynomial pp_bounded_qgf(const Partition& mu, long d) {
    if (d < 0) throw std::domain_error("pp_bounded_qgf: negative bound");
    std::vector<Cell> cs = mu.cells();
    std::vector<long> val(cs.size(), 0);
    auto at = [&](long i, long j, long dflt) -> long {
        for (size_t k = 0; k < cs.size(); ++k)
            if (cs[k].i == i && cs[k].j == j) return val[k];
        return dflt;
    };
    QPolynomial out;
    auto rec = [&](auto&& self, size_t k, long vol) -> void {
        if (k == cs.size()) {
            out += QPolynomial::monomial(Int(1), vol);
            return;
        }
        long hi = d;
        if (mu.contains_cell(cs[k].i, cs[k].j - 1)) hi = std::min(hi, at(cs[k].i, cs[k].j - 1, d));
        if (mu.contains_cell(cs[k].i - 1, cs[k].j)) hi = std::min(hi, at(cs[k].i - 1, cs[k].j, d));
        for (long v = 0; v <= hi; ++v) {
            val[k] = v;
            self(self, k + 1, vol + v);
        }
        val[k] = 0;
    };
    rec(rec, 0, 0);
    return out;
}

inline Int pp_bounded_count(const Partition& mu, long d) {
    Rat v = pp_bounded_qgf(mu, d).eval(Rat(1));
    return rat_to_int(v, "pp_bounded_count");
}

// Entringer boustrophedon: E_n with E_0 = E_1 = 1, E_3 = 2, E_5 = 16.
inline Int euler_number(long n) {
    if (n < 0) throw std::domain_error("euler_number: negative argument");
    std::vector<Int> row{Int(1)};
    for (long m = 1; m <= n; ++m) {
        std::vector<Int> next(m + 1, Int(0));
        for (long k = 1; k <= m; ++k) next[k] = next[k - 1] + row[m - k];
        row = std::move(next);
    }
    return row.back();
}

// Direct oracle: permutations with s_1 < s_2 > s_3 < ...
inline Int alternating_count(long n) {
    if (n < 0) throw std::domain_error("alternating_count: negative argument");
    if (n <= 1) return 1;
    std::vector<long> p(n);
    for (long i = 0; i < n; ++i) p[i] = i + 1;
    Int total = 0;
    do {
        bool ok = true;
        for (long i = 0; i + 1 < n && ok; ++i)
            ok = (i % 2 == 0) ? p[i] < p[i + 1] : p[i] > p[i + 1];
        if (ok) total += 1;
    } while (std::next_permutation(p.begin(), p.end()));
    return total;
}

}  // namespace skewhook
