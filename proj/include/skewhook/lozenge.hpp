#pragma once

#include "skewhook/multivar.hpp"
#include "skewhook/qpoly.hpp"
#include "skewhook/tableaux.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

namespace skewhook {

// Lozenge tilings of the region with base mu and bounded stack heights,
// encoded by how far each base cell slid along its diagonal. Sliding tables
// are exactly the displacement tables of SE excited diagrams, so validity
// has a single source of truth.

struct TilingRegion {
    SkewShape shape;
    long height = 0;
};

// every displacement in the shape is bounded by the diagonal slack of the
// bottom cell of some column
inline long shape_height(const SkewShape& sh) {
    const Partition &la = sh.outer(), &mu = sh.inner();
    Partition conj = mu.conjugate();
    long best = 0;
    for (long j = 1; j <= mu.part(1); ++j) {
        long i = conj.part(j), k = 0;
        while (la.contains_cell(i + k + 1, j + k + 1)) ++k;
        best = std::max(best, k);
    }
    return best;
}

inline TilingRegion region_base(const Partition& la, const Partition& mu) {
    SkewShape sh(la, mu);
    long h = shape_height(sh);
    return {std::move(sh), h};
}

// outer shape follows the border of mu with both endpoints pushed out by d
inline TilingRegion region_height(const Partition& mu, long d) {
    if (d < 0) throw std::invalid_argument("region_height: negative height");
    std::vector<long> rows(d, mu.part(1) + d);
    for (long i = 1; i <= mu.length(); ++i) rows.push_back(mu.part(i) + d);
    return {SkewShape(Partition(std::move(rows)), mu), d};
}

// hexagon with an a x b base and height c
inline TilingRegion region_hexagon(long a, long b, long c) {
    if (a < 0 || b < 0 || c < 0)
        throw std::invalid_argument("region_hexagon: negative side");
    return region_height(Partition(std::vector<long>(a, b)), c);
}

struct LozengeTiling {
    Partition base;
    long height = 0;
    std::vector<std::vector<long>> shift;  // diagonal slide of each base cell

    // positions of the horizontal lozenges
    CellSet hl() const {
        CellSet out;
        for (long i = 1; i <= base.length(); ++i)
            for (long j = 1; j <= base.part(i); ++j) {
                long t = shift[i - 1][j - 1];
                out.push_back({i + t, j + t});
            }
        std::sort(out.begin(), out.end());
        return out;
    }

    // cubes under the horizontal lozenges
    long volume() const {
        long v = 0;
        for (const auto& row : shift)
            for (long t : row) v += height - t;
        return v;
    }

    bool operator==(const LozengeTiling&) const = default;
};

inline LozengeTiling excited_to_tiling(const ExcitedDiagram& ed) {
    return {ed.shape.inner(), shape_height(ed.shape),
            displacements(ed.shape, ed.cells)};
}

inline ExcitedDiagram tiling_to_excited(const SkewShape& sh, const LozengeTiling& T) {
    if (T.base != sh.inner())
        throw std::domain_error("tiling_to_excited: base differs from inner shape");
    if (T.shift.size() != static_cast<size_t>(T.base.length()))
        throw std::domain_error("tiling_to_excited: slide table shape mismatch");
    for (long i = 1; i <= T.base.length(); ++i)
        if (T.shift[i - 1].size() != static_cast<size_t>(T.base.part(i)))
            throw std::domain_error("tiling_to_excited: slide table shape mismatch");
    CellSet cells = diagram_from_displacements(sh, T.shift);
    if (!is_excited(sh, cells))
        throw std::domain_error("tiling_to_excited: slides do not give a tiling");
    return {sh, std::move(cells)};
}

inline LozengeTiling seed_tiling(const TilingRegion& region) {
    const Partition& mu = region.shape.inner();
    std::vector<std::vector<long>> t(mu.length());
    for (long i = 1; i <= mu.length(); ++i) t[i - 1].assign(mu.part(i), 0);
    return {mu, region.height, std::move(t)};
}

inline std::vector<LozengeTiling> enumerate_tilings(const TilingRegion& region) {
    std::vector<LozengeTiling> out;
    for (const CellSet& d : enumerate_excited(region.shape))
        out.push_back({region.shape.inner(), region.height,
                       displacements(region.shape, d)});
    return out;
}

inline WeightSpec uniform_weights(long rows, long cols) {
    WeightSpec w;
    w.x.assign(static_cast<size_t>(rows), Rat(1));
    w.y.assign(static_cast<size_t>(cols), Rat(0));
    return w;
}

inline void check_cover(const WeightSpec& w, const SkewShape& sh, const char* who) {
    if (static_cast<long>(w.x.size()) < sh.outer().length() ||
        static_cast<long>(w.y.size()) < sh.outer().part(1))
        throw std::domain_error(std::string(who) +
                                ": weight vectors do not cover the region");
}

inline Rat tiling_weight(const LozengeTiling& T, const WeightSpec& w) {
    Rat prod = 1;
    for (const Cell& c : T.hl()) {
        if (c.i > static_cast<long>(w.x.size()) || c.j > static_cast<long>(w.y.size()))
            throw std::domain_error("tiling_weight: weight vectors do not cover the tiling");
        prod *= w.x[c.i - 1] - w.y[c.j - 1];
    }
    return prod;
}

inline Rat tiling_weight_hook(const LozengeTiling& T, const Partition& la) {
    return tiling_weight(T, hook_point(la));
}

// weighted count of the region's tilings; the determinant route clears the
// Vandermonde into the rows, so it only divides by differences x_i - x_k
// with i < k < L_j and reports the offending pair when one vanishes
inline Rat partition_function(const TilingRegion& region, const WeightSpec& w,
                              CountMethod method = CountMethod::determinant) {
    check_cover(w, region.shape, "partition_function");
    if (method == CountMethod::enumerate) {
        Rat total = 0;
        for (const LozengeTiling& T : enumerate_tilings(region))
            total += tiling_weight(T, w);
        return total;
    }
    if (method != CountMethod::determinant)
        throw std::domain_error("partition_function: unsupported method");

    const Partition &la = region.shape.outer(), &mu = region.shape.inner();
    long n = la.length();
    RationalMatrix m(n, n);
    for (long j = 1; j <= n; ++j) {
        // first row whose border diagonal falls at or below the one of
        // column j of the base; lambda_k - k is strictly decreasing
        long L = n + 1;
        for (long k = 1; k <= n; ++k)
            if (la.part(k) - k + 1 <= mu.part(j) - j) {
                L = k;
                break;
            }
        for (long i = 1; i <= n; ++i) {
            if (L <= i) {
                m.at(i - 1, j - 1) = 0;
                continue;
            }
            Rat e = 1;
            for (long t = 1; t <= mu.part(j) + L - j - 1; ++t)
                e *= w.x[i - 1] - w.y[t - 1];
            for (long k = i + 1; k <= L - 1; ++k) {
                Rat div = w.x[i - 1] - w.x[k - 1];
                if (div == 0)
                    throw singularity_error(
                        "partition_function: coincident weights x_" +
                        std::to_string(i) + " and x_" + std::to_string(k));
                e /= div;
            }
            m.at(i - 1, j - 1) = e;
        }
    }
    return det_exact(m);
}

// volume generating function of stacks over mu with heights <= d; rows of
// the determinant are rescaled by (q;q)_{d+l-i} to stay inside Z[q,1/q]
inline QPolynomial qvolume_det(const Partition& mu, long d) {
    if (d < 0) throw std::invalid_argument("qvolume_det: negative height");
    long l = mu.length(), n = l + d;
    if (n == 0) return QPolynomial(1);
    std::vector<std::vector<QPolynomial>> m(n, std::vector<QPolynomial>(n));
    for (long i = 1; i <= n; ++i)
        for (long j = 1; j <= n; ++j) {
            if (j > l) {
                long alpha = (d - i) * (d + l - j) - (d - i + l) * (d - i - l - 1) / 2;
                m[i - 1][j - 1] =
                    QPolynomial::monomial(Int((d + l - i) % 2 ? -1 : 1), alpha);
            } else if (j >= i - d) {
                long beta =
                    (d - i) * (mu.part(j) + d) - (d + j - i) * (d - i - j - 1) / 2;
                QPolynomial e =
                    QPolynomial::monomial(Int((d + j - i) % 2 ? -1 : 1), beta);
                for (long t = d + j - i + 1; t <= d + l - i; ++t)
                    e *= QPolynomial::one_minus_q(t);
                m[i - 1][j - 1] = e;
            }
        }
    QPolynomial det = det_poly(std::move(m));
    QPolynomial denom(1);
    for (long i = 1; i <= n; ++i) denom *= q_factorial(d + l - i);
    long nmu = 0;
    for (long r = 1; r <= l; ++r) nmu += r * mu.part(r);
    return det.divide_exact(denom).shifted(nmu);
}

// border path of a hexagon tiling: vertical positions read along the a+b+1
// diagonals j - i = b, b-1, ..., -a; both endpoints sit at the cut height
struct HexPath {
    long a = 0, b = 0, c = 0;
    std::vector<long> depth;
};

inline HexPath path_from_base(long a, long b, long c, const Partition& mu,
                              long cut) {
    if (a < 0 || b < 0 || c <= 0)
        throw std::invalid_argument("path_from_base: bad hexagon");
    if (mu.length() > a || mu.part(1) > b)
        throw std::domain_error("path_from_base: base leaves the a x b rectangle");
    if (cut < 0 || cut > c - 1)
        throw std::domain_error("path_from_base: cut outside the height range");
    HexPath p{a, b, c, {}};
    for (long k = 1; k <= a + b + 1; ++k)
        p.depth.push_back(cut + diag_cells(mu, b + 1 - k));
    return p;
}

// reads the base back off the path; any profile that fails to round-trip is
// rejected, which covers all the step and monotonicity constraints at once
inline Partition path_base(const HexPath& p) {
    long a = p.a, b = p.b, c = p.c;
    if (a < 0 || b < 0 || c <= 0 || static_cast<long>(p.depth.size()) != a + b + 1)
        throw std::domain_error("path_base: malformed path");
    // middle depths may exceed c - 1: the hexagon bulges below the cut there
    for (long v : p.depth)
        if (v < 0) throw std::domain_error("path_base: negative depth");
    long h = p.depth.front();
    std::vector<long> rows(static_cast<size_t>(a), 0);
    for (long k = 1; k <= a + b + 1; ++k) {
        long o = b + 1 - k, s = p.depth[k - 1] - h;
        if (s < 0) throw std::domain_error("path_base: depth below the endpoints");
        long top = std::max(1L, 1 - o);
        if (s > 0 && top + s - 1 > a)
            throw std::domain_error("path_base: diagonal runs out of rows");
        for (long i = top; i < top + s; ++i)
            rows[i - 1] = std::max(rows[i - 1], i + o);
    }
    Partition mu;
    try {
        mu = Partition(std::move(rows));
    } catch (const std::invalid_argument&) {
        throw std::domain_error("path_base: profile is not a partition");
    }
    HexPath q = path_from_base(a, b, c, mu, h);
    if (q.depth != p.depth)
        throw std::domain_error("path_base: profile is not a lattice path");
    return mu;
}

// complement of the base in the a x b rectangle, rotated half a turn
inline Partition path_cobase(const HexPath& p) {
    Partition mu = path_base(p);
    std::vector<long> rows;
    for (long i = 1; i <= p.a; ++i) rows.push_back(p.b - mu.part(p.a + 1 - i));
    return Partition(std::move(rows));
}

// chance that a random tiling of the hexagon meets the fixed border path:
// the path splits the region into two independent smaller ones, the lower
// one living in coordinates rotated half a turn
inline Rat path_probability(const HexPath& p, const WeightSpec& w,
                            CountMethod method = CountMethod::determinant) {
    Partition mu = path_base(p), nu = path_cobase(p);
    long a = p.a, b = p.b, c = p.c, h = p.depth.front();
    if (static_cast<long>(w.x.size()) < a + c ||
        static_cast<long>(w.y.size()) < b + c)
        throw std::domain_error(
            "path_probability: weight vectors do not cover the hexagon");
    if (!w.positive())
        throw std::domain_error(
            "path_probability: weights must satisfy min x >= max y");
    WeightSpec r;
    r.x.assign(w.x.begin(), w.x.begin() + (a + c));
    r.y.assign(w.y.begin(), w.y.begin() + (b + c));
    std::reverse(r.x.begin(), r.x.end());
    std::reverse(r.y.begin(), r.y.end());
    Rat z = partition_function(region_hexagon(a, b, c), w, method);
    if (z == 0) throw std::domain_error("path_probability: zero partition function");
    Rat top = partition_function(region_height(mu, h), w, method);
    Rat bot = partition_function(region_height(nu, c - h - 1), r, method);
    return top * bot / z;
}

// hook-weighted count of tilings of the a x b x c hexagon, where the
// horizontal lozenge at (i,j) weighs k - i - j with k = a+b+2c+d+e+1
inline Rat tilings_product(long a, long b, long c, long d, long e) {
    if (a < 0 || b < 0 || c < 0 || d < 0 || e < 0)
        throw std::invalid_argument("tilings_product: negative parameter");
    Rat num = Rat(superfactorial(a + b + c + d + e)) * Rat(superfactorial(c + d + e)) *
              Rat(superfactorial(a + b + c)) * Rat(superfactorial(a)) *
              Rat(superfactorial(b)) * Rat(superfactorial(c));
    Rat den = Rat(superfactorial(a + c + d + e)) * Rat(superfactorial(b + c + d + e)) *
              Rat(superfactorial(a + b)) * Rat(superfactorial(b + c)) *
              Rat(superfactorial(a + c));
    return num / den;
}

// chance that the mid-height path of a hook-weighted tiling of the
// (a, 2b, 2c+1) hexagon freezes the two b^a corner regions
inline Rat frozen_rhombi_probability(long a, long b, long c) {
    if (a < 1 || b < 1 || c < 1)
        throw std::invalid_argument("frozen_rhombi_probability: parameters below 1");
    return tilings_product(a, b, c, 0, 0) * tilings_product(a, b, c, b + 1, 2 * c + 1) /
           tilings_product(a, 2 * b, 2 * c + 1, 0, 0);
}

struct ZigzagReport {
    Rat lower, upper, scale, uniform;
    bool has_exact = false;
    Rat exact;
};

// bounds for the hook-weighted probability of the zigzag path in the
// (2a+1, 2a, 2a+1) hexagon, with the staircase base cut at height a;
// the a = 1 case is small enough to settle exactly by enumeration
inline ZigzagReport zigzag_bounds(long a) {
    if (a < 1) throw std::invalid_argument("zigzag_bounds: need a >= 1");
    ZigzagReport rep;
    Rat num = Rat(superfactorial(8 * a + 3)) * Rat(superfactorial(4 * a + 2)) *
              Rat(pow_int(factorial(4 * a), 2 * a + 1));
    Rat den = Rat(superfactorial(6 * a + 2)) * Rat(superfactorial(6 * a + 2)) *
              Rat(pow_int(factorial(6 * a + 2), 2 * a + 1)) * Rat(factorial(2 * a));
    rep.scale = num / den;
    Int box = box_count(2 * a + 1, 2 * a, 2 * a + 1);
    Int rpp = rpp_bounded_count(Partition::staircase(2 * a + 1), a);
    rep.uniform = Rat(rpp * rpp) / Rat(box);
    rep.lower = rep.scale / Rat(box);
    rep.upper = rep.scale * rep.uniform;
    if (a == 1) {
        HexPath p = path_from_base(3, 2, 3, Partition::staircase(3), 1);
        WeightSpec w = hook_point(region_hexagon(3, 2, 3).shape.outer());
        rep.exact = path_probability(p, w, CountMethod::enumerate);
        rep.has_exact = true;
    }
    return rep;
}

struct RacahReport {
    Rat lhs, rhs;
    bool equal = false;
};

// telescoping two-parameter identity over stacks in the a x b x c box: the
// sum of level-factor products equals a closed product over the full box
inline RacahReport racah_verify(long a, long b, long c, const Rat& q, const Rat& u) {
    if (a < 0 || b < 0 || c < 0)
        throw std::invalid_argument("racah_verify: negative box side");
    // pre[i][j][m]: product of the first m level factors of the stack at (i,j)
    std::vector<std::vector<std::vector<Rat>>> pre(
        static_cast<size_t>(a),
        std::vector<std::vector<Rat>>(static_cast<size_t>(b)));
    for (long i = 1; i <= a; ++i)
        for (long j = 1; j <= b; ++j) {
            std::vector<Rat>& col = pre[i - 1][j - 1];
            col.assign(1, Rat(1));
            for (long k = 1; k <= c; ++k) {
                Rat dn = 1 - pow_rat(q, j + k - 2 * i + 1) * u;
                if (dn == 0)
                    throw singularity_error("racah_verify: singular factor at (" +
                                            std::to_string(i) + "," + std::to_string(j) +
                                            "," + std::to_string(k) + ")");
                col.push_back(col.back() * (q - pow_rat(q, j + k - 2 * i) * u) / dn);
            }
        }
    std::vector<std::vector<long>> hgt(static_cast<size_t>(a),
                                       std::vector<long>(static_cast<size_t>(b), 0));
    Rat lhs = 0;
    auto rec = [&](auto&& self, long idx, const Rat& prod) -> void {
        if (idx == a * b) {
            lhs += prod;
            return;
        }
        long i = idx / b + 1, j = idx % b + 1;
        long cap = c;
        if (i > 1) cap = std::min(cap, hgt[i - 2][j - 1]);
        if (j > 1) cap = std::min(cap, hgt[i - 1][j - 2]);
        for (long v = 0; v <= cap; ++v) {
            hgt[i - 1][j - 1] = v;
            self(self, idx + 1, prod * pre[i - 1][j - 1][v]);
        }
        hgt[i - 1][j - 1] = 0;
    };
    rec(rec, 0, Rat(1));

    Rat rhs = 1;
    for (long i = 1; i <= a; ++i)
        for (long j = 1; j <= b; ++j)
            for (long k = 1; k <= c; ++k) {
                Rat dn = (1 - pow_rat(q, i + j + k - 2)) * (1 - pow_rat(q, j + k - i) * u);
                if (dn == 0)
                    throw singularity_error("racah_verify: singular factor at (" +
                                            std::to_string(i) + "," + std::to_string(j) +
                                            "," + std::to_string(k) + ")");
                rhs *= (1 - pow_rat(q, i + j + k - 1)) *
                       (1 - pow_rat(q, j + k - i - 1) * u) / dn;
            }
    return {lhs, rhs, lhs == rhs};
}

// same identity along the line q^h u = const after dividing out 1 - q: all
// factors become ratios of integer offsets shifted by h
inline RacahReport racah_verify_h(long a, long b, long c, long h) {
    if (a < 0 || b < 0 || c < 0)
        throw std::invalid_argument("racah_verify_h: negative box side");
    std::vector<std::vector<std::vector<Rat>>> pre(
        static_cast<size_t>(a),
        std::vector<std::vector<Rat>>(static_cast<size_t>(b)));
    for (long i = 1; i <= a; ++i)
        for (long j = 1; j <= b; ++j) {
            std::vector<Rat>& col = pre[i - 1][j - 1];
            col.assign(1, Rat(1));
            for (long k = 1; k <= c; ++k) {
                long dn = j + k - 2 * i + 1 + h;
                if (dn == 0)
                    throw singularity_error("racah_verify_h: singular factor at (" +
                                            std::to_string(i) + "," + std::to_string(j) +
                                            "," + std::to_string(k) + ")");
                Rat f(j + k - 2 * i - 1 + h, dn);
                f.canonicalize();
                col.push_back(col.back() * f);
            }
        }
    std::vector<std::vector<long>> hgt(static_cast<size_t>(a),
                                       std::vector<long>(static_cast<size_t>(b), 0));
    Rat lhs = 0;
    auto rec = [&](auto&& self, long idx, const Rat& prod) -> void {
        if (idx == a * b) {
            lhs += prod;
            return;
        }
        long i = idx / b + 1, j = idx % b + 1;
        long cap = c;
        if (i > 1) cap = std::min(cap, hgt[i - 2][j - 1]);
        if (j > 1) cap = std::min(cap, hgt[i - 1][j - 2]);
        for (long v = 0; v <= cap; ++v) {
            hgt[i - 1][j - 1] = v;
            self(self, idx + 1, prod * pre[i - 1][j - 1][v]);
        }
        hgt[i - 1][j - 1] = 0;
    };
    rec(rec, 0, Rat(1));

    Rat rhs = 1;
    for (long i = 1; i <= a; ++i)
        for (long j = 1; j <= b; ++j)
            for (long k = 1; k <= c; ++k) {
                long dn = j + k - i + h;
                if (dn == 0)
                    throw singularity_error("racah_verify_h: singular factor at (" +
                                            std::to_string(i) + "," + std::to_string(j) +
                                            "," + std::to_string(k) + ")");
                Rat f((i + j + k - 1) * (j + k - i - 1 + h), (i + j + k - 2) * dn);
                f.canonicalize();
                rhs *= f;
            }
    return {lhs, rhs, lhs == rhs};
}

enum class TilingWeightMode { uniform, hook, explicit_spec };

struct SamplerConfig {
    TilingRegion region;
    TilingWeightMode mode = TilingWeightMode::uniform;
    Partition hook_shape;
    WeightSpec weights;
    long steps = 0;
    std::uint64_t seed = 0;
};

inline WeightSpec sampler_weights(const SamplerConfig& cfg) {
    const Partition& la = cfg.region.shape.outer();
    WeightSpec w;
    switch (cfg.mode) {
        case TilingWeightMode::uniform:
            w = uniform_weights(la.length(), la.part(1));
            break;
        case TilingWeightMode::hook:
            w = hook_point(cfg.hook_shape);
            if (!w.positive())
                throw std::domain_error(
                    "metropolis_sample: hook weights must satisfy min x >= max y");
            break;
        case TilingWeightMode::explicit_spec:
            w = cfg.weights;
            break;
    }
    check_cover(w, cfg.region.shape, "metropolis_sample");
    for (long i = 1; i <= la.length(); ++i)
        for (long j = 1; j <= la.part(i); ++j)
            if (w.x[i - 1] - w.y[j - 1] <= 0)
                throw std::domain_error(
                    "metropolis_sample: nonpositive weight at cell (" +
                    std::to_string(i) + "," + std::to_string(j) + ")");
    return w;
}

struct SampleStats {
    LozengeTiling tiling;
    long proposals = 0;
    long accepted = 0;
};

// single-site Metropolis dynamics: pick a base cell, slide it one step along
// its diagonal, accept with the exact rational odds against a dyadic draw;
// the draw is only consumed when the odds are below one
template <class Observer>
SampleStats metropolis_sample(const SamplerConfig& cfg, Observer&& observe) {
    if (cfg.steps < 0)
        throw std::invalid_argument("metropolis_sample: negative step count");
    WeightSpec w = sampler_weights(cfg);
    const SkewShape& sh = cfg.region.shape;
    std::vector<Cell> cells = sh.inner().cells();
    SampleStats st{seed_tiling(cfg.region), 0, 0};
    SplitMix64 rng(cfg.seed);
    for (long step = 0; step < cfg.steps; ++step) {
        if (cells.empty()) {
            observe(st.tiling);
            continue;
        }
        ++st.proposals;
        const Cell& cell = cells[rng.below(cells.size())];
        long dir = rng.coin() ? 1 : -1;
        long t = st.tiling.shift[cell.i - 1][cell.j - 1], t2 = t + dir;
        bool ok = t2 >= 0;
        if (ok) {
            std::vector<std::vector<long>> cand = st.tiling.shift;
            cand[cell.i - 1][cell.j - 1] = t2;
            ok = is_excited(sh, diagram_from_displacements(sh, cand));
        }
        if (ok) {
            Rat from = w.x[cell.i - 1 + t] - w.y[cell.j - 1 + t];
            Rat to = w.x[cell.i - 1 + t2] - w.y[cell.j - 1 + t2];
            Rat odds = to / from;
            if (odds < 1) ok = rng.dyadic53() < odds;
        }
        if (ok) {
            st.tiling.shift[cell.i - 1][cell.j - 1] = t2;
            ++st.accepted;
        }
        observe(st.tiling);
    }
    return st;
}

inline SampleStats metropolis_sample(const SamplerConfig& cfg) {
    return metropolis_sample(cfg, [](const LozengeTiling&) {});
}

struct SvgStyle {
    long unit = 24;
};

// isometric drawing on the triangular lattice: stacks of height d - shift
// over the base, one polygon per unit rhombus, region outline on top
inline std::string render_svg(const LozengeTiling& T, const SvgStyle& style = {}) {
    const Partition& mu = T.base;
    long l = mu.length(), d = T.height;
    double u = static_cast<double>(style.unit);

    struct Pt {
        double x, y;
    };
    struct Face {
        const char* cls;
        Pt p[4];
    };
    auto proj = [&](double X, double Y, double Z) -> Pt {
        return {(Y - X) * 0.8660254037844386 * u, ((X + Y) / 2 - Z) * u};
    };
    auto stack = [&](long i, long j) -> long {
        if (i < 1 || i > l || j < 1 || j > mu.part(i)) return 0;
        return d - T.shift[i - 1][j - 1];
    };

    std::vector<Face> faces;
    auto quad = [&](const char* cls, double X0, double Y0, double Z0, double X1,
                    double Y1, double Z1, double X2, double Y2, double Z2,
                    double X3, double Y3, double Z3) {
        faces.push_back({cls,
                         {proj(X0, Y0, Z0), proj(X1, Y1, Z1), proj(X2, Y2, Z2),
                          proj(X3, Y3, Z3)}});
    };
    for (long i = 1; i <= l; ++i)
        for (long j = 1; j <= mu.part(i); ++j) {
            long h = stack(i, j);
            quad("lz-top", i - 1, j - 1, h, i - 1, j, h, i, j, h, i, j - 1, h);
            for (long z = stack(i + 1, j); z < h; ++z)
                quad("lz-x", i, j - 1, z, i, j, z, i, j, z + 1, i, j - 1, z + 1);
            for (long z = stack(i, j + 1); z < h; ++z)
                quad("lz-y", i - 1, j, z, i, j, z, i, j, z + 1, i - 1, j, z + 1);
        }
    for (long j = 1; j <= mu.part(1); ++j)
        for (long z = stack(1, j); z < d; ++z)
            quad("lz-x", 0, j - 1, z, 0, j, z, 0, j, z + 1, 0, j - 1, z + 1);
    for (long i = 1; i <= l; ++i)
        for (long z = stack(i, 1); z < d; ++z)
            quad("lz-y", i - 1, 0, z, i, 0, z, i, 0, z + 1, i - 1, 0, z + 1);

    std::vector<std::array<long, 3>> corners;
    auto corner = [&](long X, long Y, long Z) {
        if (corners.empty() || corners.back() != std::array<long, 3>{X, Y, Z})
            corners.push_back({X, Y, Z});
    };
    corner(0, 0, d);
    corner(0, mu.part(1), d);
    corner(0, mu.part(1), 0);
    for (long i = 1; i <= l; ++i) {
        corner(i - 1, mu.part(i), 0);
        corner(i, mu.part(i), 0);
    }
    corner(l, 0, 0);
    corner(l, 0, d);
    std::vector<Pt> outline;
    for (const auto& q : corners)
        outline.push_back(proj(static_cast<double>(q[0]), static_cast<double>(q[1]),
                               static_cast<double>(q[2])));

    double minx = outline.front().x, maxx = minx;
    double miny = outline.front().y, maxy = miny;
    auto widen = [&](const Pt& p) {
        minx = std::min(minx, p.x);
        maxx = std::max(maxx, p.x);
        miny = std::min(miny, p.y);
        maxy = std::max(maxy, p.y);
    };
    for (const Face& f : faces)
        for (const Pt& p : f.p) widen(p);
    for (const Pt& p : outline) widen(p);

    double pad = u * 0.25, ox = pad - minx, oy = pad - miny;
    auto fmt = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.2f", v + 0.0);
        return std::string(buf);
    };
    auto points = [&](const Pt* p, size_t cnt) {
        std::string s;
        for (size_t k = 0; k < cnt; ++k) {
            if (k) s += " ";
            s += fmt(p[k].x + ox) + "," + fmt(p[k].y + oy);
        }
        return s;
    };

    std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " +
                      fmt(maxx - minx + 2 * pad) + " " + fmt(maxy - miny + 2 * pad) +
                      "\">\n";
    svg += "<style>polygon{stroke:#403525;stroke-width:1;stroke-linejoin:round}"
           ".lz-top{fill:#f4c95d}.lz-x{fill:#a8653c}.lz-y{fill:#e8e4d0}"
           ".lz-edge{fill:none;stroke-width:1.5}</style>\n";
    for (const Face& f : faces)
        svg += "<polygon class=\"" + std::string(f.cls) + "\" points=\"" +
               points(f.p, 4) + "\"/>\n";
    svg += "<polygon class=\"lz-edge\" points=\"" +
           points(outline.data(), outline.size()) + "\"/>\n";
    svg += "</svg>\n";
    return svg;
}

}  // namespace skewhook
