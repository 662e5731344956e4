#pragma once

#include "skewhook/excited.hpp"
#include "skewhook/prng.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace skewhook {

// evaluation point makes a denominator vanish (or a Vandermonde collapse)
struct singularity_error : std::domain_error {
    using std::domain_error::domain_error;
};

struct WeightSpec {
    std::vector<Rat> x, y;

    // weak ordering min(x) >= max(y); keeps every factor x_i - y_j nonnegative
    bool positive() const {
        if (x.empty() || y.empty()) return true;
        return *std::min_element(x.begin(), x.end()) >=
               *std::max_element(y.begin(), y.end());
    }
};

struct FactorialSchurInput {
    Partition mu;
    long d = 0;
    std::vector<Rat> x;
    std::vector<Rat> a;
};

enum class SchurMethod { determinant, tableaux };

// parameters are demanded lazily: only indices a_t a route actually touches
// need to be supplied
inline const Rat& schur_param(const std::vector<Rat>& a, long t) {
    if (t < 1 || t > static_cast<long>(a.size()))
        throw std::domain_error("factorial_schur: parameter a_" + std::to_string(t) +
                                " not supplied");
    return a[t - 1];
}

inline Rat factorial_schur(const FactorialSchurInput& in, SchurMethod method) {
    const Partition& mu = in.mu;
    long d = in.d;
    if (mu.length() > d) throw std::domain_error("factorial_schur: mu longer than d");
    if (static_cast<long>(in.x.size()) < d)
        throw std::domain_error("factorial_schur: fewer than d variables");
    if (d == 0) return 1;

    if (method == SchurMethod::determinant) {
        for (long i = 0; i < d; ++i)
            for (long j = i + 1; j < d; ++j)
                if (in.x[i] == in.x[j])
                    throw singularity_error("factorial_schur: repeated x value");
        RationalMatrix m(d, d);
        for (long j = 1; j <= d; ++j)
            for (long i = 1; i <= d; ++i) {
                Rat prod = 1;
                for (long t = 1; t <= mu.part(j) + d - j; ++t)
                    prod *= in.x[i - 1] - schur_param(in.a, t);
                m.at(i - 1, j - 1) = prod;
            }
        Rat vandermonde = 1;
        for (long i = 0; i < d; ++i)
            for (long j = i + 1; j < d; ++j) vandermonde *= in.x[i] - in.x[j];
        return det_exact(m) / vandermonde;
    }

    if (mu.size() > 30) throw resource_error("factorial_schur: tableaux bound exceeded");
    std::vector<Cell> cs = mu.cells();
    Partition conj = mu.conjugate();
    std::map<Cell, size_t> pos;
    for (size_t k = 0; k < cs.size(); ++k) pos[cs[k]] = k;
    std::vector<long> entry(cs.size(), 0);
    Rat total = 0;
    auto rec = [&](auto&& self, size_t k, const Rat& w) -> void {
        if (k == cs.size()) {
            total += w;
            return;
        }
        const Cell& c = cs[k];
        long lo = 1;
        auto left = pos.find({c.i, c.j - 1});
        if (left != pos.end()) lo = std::max(lo, entry[left->second]);
        auto above = pos.find({c.i - 1, c.j});
        if (above != pos.end()) lo = std::max(lo, entry[above->second] + 1);
        // the conj.part(c.j) - c.i cells below still need distinct larger entries
        for (long v = lo; v <= d - (conj.part(c.j) - c.i); ++v) {
            entry[k] = v;
            self(self, k + 1, w * (in.x[v - 1] - schur_param(in.a, v + content(c))));
        }
        entry[k] = 0;
    };
    rec(rec, 0, Rat(1));
    return total;
}

// z-labels of the lattice path tracing the boundary of lambda from (d,1) to
// (1,n-d): x_i follows the i-th horizontal step, y_j the j-th vertical step
inline std::vector<Rat> z_sequence(const Partition& la, long d, long n,
                                   const WeightSpec& w) {
    if (la.length() > d || la.part(1) > n - d)
        throw std::domain_error("z_sequence: shape exceeds the d x (n-d) rectangle");
    if (static_cast<long>(w.x.size()) < d || static_cast<long>(w.y.size()) < n - d)
        throw std::domain_error("z_sequence: weight vectors too short");
    std::vector<Rat> z(n);
    std::vector<bool> used(n, false);
    auto place = [&](long t, const Rat& v) {
        if (t < 1 || t > n || used[t - 1])
            throw std::logic_error("z_sequence: index coverage failed");
        used[t - 1] = true;
        z[t - 1] = v;
    };
    for (long i = 1; i <= d; ++i) place(la.part(i) + d - i + 1, w.x[i - 1]);
    Partition conj = la.conjugate();
    for (long j = 1; j <= n - d; ++j) place(d + j - conj.part(j), w.y[j - 1]);
    return z;
}

enum class GMethod { sum, factorial_schur };

// G(x|y) = sum over excited diagrams D of prod_{(i,j) in D} (x_i - y_j)
inline Rat G_eval(const SkewShape& sh, const WeightSpec& w,
                  GMethod method = GMethod::sum,
                  ExcitedVariant variant = ExcitedVariant::SE) {
    const Partition& la = sh.outer();
    long d = static_cast<long>(w.x.size());
    long n = d + static_cast<long>(w.y.size());
    if (la.length() > d || la.part(1) > n - d)
        throw std::domain_error("G_eval: weight vectors do not cover the shape");
    if (method == GMethod::sum) {
        Rat total = 0;
        for (const CellSet& dia : enumerate_excited(sh, variant)) {
            Rat prod = 1;
            for (const Cell& c : dia) prod *= w.x[c.i - 1] - w.y[c.j - 1];
            total += prod;
        }
        return total;
    }
    if (variant != ExcitedVariant::SE)
        throw std::domain_error("G_eval: factorial_schur method is SE only");
    return factorial_schur({sh.inner(), d, w.x, z_sequence(la, d, n, w)},
                           SchurMethod::determinant);
}

// F(x|y) = sum over excited diagrams D of prod over the complement of D in
// [lambda] of 1/(x_i - y_j)
inline Rat F_eval(const SkewShape& sh, const WeightSpec& w,
                  ExcitedVariant variant = ExcitedVariant::SE) {
    const Partition& la = sh.outer();
    if (la.length() > static_cast<long>(w.x.size()) ||
        la.part(1) > static_cast<long>(w.y.size()))
        throw std::domain_error("F_eval: weight vectors do not cover the shape");
    for (const Cell& c : la.cells())
        if (w.x[c.i - 1] == w.y[c.j - 1])
            throw singularity_error("F_eval: zero factor at cell (" +
                                    std::to_string(c.i) + "," + std::to_string(c.j) +
                                    ")");
    Rat total = 0;
    for (const CellSet& dia : enumerate_excited(sh, variant)) {
        std::set<Cell> in(dia.begin(), dia.end());
        Rat prod = 1;
        for (const Cell& c : la.cells())
            if (!in.count(c)) prod /= w.x[c.i - 1] - w.y[c.j - 1];
        total += prod;
    }
    return total;
}

// x_i = lambda_i - i + 1 and y_j = j - lambda'_j turn every factor on
// [lambda] into the hook length h(i,j)
inline WeightSpec hook_point(const Partition& la) {
    WeightSpec w;
    Partition conj = la.conjugate();
    for (long i = 1; i <= la.length(); ++i) w.x.emplace_back(la.part(i) - i + 1);
    for (long j = 1; j <= la.part(1); ++j) w.y.emplace_back(j - conj.part(j));
    return w;
}

// f^{lambda/mu} / |lambda/mu|! through the diagram sum
inline Rat specialize_hooks_numeric(const SkewShape& sh) {
    return F_eval(sh, hook_point(sh.outer()));
}

// s_{lambda/mu}(1,q,q^2,...) through q^order
inline QSeries specialize_hooks_qseries(const SkewShape& sh, long order) {
    return qnhlf_series(sh, order);
}

enum class IdentityKind {
    rect_symmetry,
    slim_symmetry,
    thick_strip,
    slim_flip,
    reverse_hook_path
};

inline std::string identity_kind_name(IdentityKind k) {
    switch (k) {
        case IdentityKind::rect_symmetry: return "rect_symmetry";
        case IdentityKind::slim_symmetry: return "slim_symmetry";
        case IdentityKind::thick_strip: return "thick_strip";
        case IdentityKind::slim_flip: return "slim_flip";
        case IdentityKind::reverse_hook_path: return "reverse_hook_path";
    }
    throw std::logic_error("identity_kind_name: bad kind");
}

inline IdentityKind parse_identity_kind(const std::string& s) {
    for (IdentityKind k :
         {IdentityKind::rect_symmetry, IdentityKind::slim_symmetry,
          IdentityKind::thick_strip, IdentityKind::slim_flip,
          IdentityKind::reverse_hook_path})
        if (identity_kind_name(k) == s) return k;
    throw std::domain_error("unknown identity kind: " + s);
}

struct IdentityParams {
    SkewShape shape;      // rect_symmetry, slim_symmetry, slim_flip
    long a = 0, b = 0, c = 0;  // thick_strip (a,b,c), reverse_hook_path (a,b)
};

struct IdentityFailure {
    std::string point;
    std::string lhs, rhs;
};

struct IdentityReport {
    std::string kind;
    long trials = 0;
    std::vector<IdentityFailure> failures;
    bool ok() const { return failures.empty(); }
};

// one orientation of the single-path hook sum: paths step north/east from
// (a,1) to (1,b), or south/east from (1,1) to (a,b); each visited cell
// contributes 1/(i+j-1)
inline Rat reverse_hook_sum(long a, long b, bool start_south) {
    if (a < 1 || b < 1) throw std::domain_error("reverse_hook_sum: empty grid");
    auto rec = [&](auto&& self, long i, long j) -> Rat {
        Rat cell(1, i + j - 1);
        bool done = start_south ? (i == 1 && j == b) : (i == a && j == b);
        if (done) return cell;
        Rat acc = 0;
        if (start_south && i > 1) acc += self(self, i - 1, j);
        if (!start_south && i < a) acc += self(self, i + 1, j);
        if (j < b) acc += self(self, i, j + 1);
        return cell * acc;
    };
    return rec(rec, start_south ? a : 1, 1);
}

inline std::string weight_point_str(const WeightSpec& w) {
    std::string s = "x=(";
    for (size_t i = 0; i < w.x.size(); ++i) s += (i ? "," : "") + rat_str(w.x[i]);
    s += "); y=(";
    for (size_t j = 0; j < w.y.size(); ++j) s += (j ? "," : "") + rat_str(w.y[j]);
    return s + ")";
}

inline IdentityReport verify_identity(IdentityKind kind, const IdentityParams& par,
                                      long trials, std::uint64_t seed) {
    IdentityReport rep;
    rep.kind = identity_kind_name(kind);

    if (kind == IdentityKind::reverse_hook_path) {
        Rat lhs = reverse_hook_sum(par.a, par.b, true);
        Rat rhs = reverse_hook_sum(par.a, par.b, false);
        rep.trials = 1;
        if (lhs != rhs)
            rep.failures.push_back({"x_i = i, y_j = 1 - j", rat_str(lhs), rat_str(rhs)});
        return rep;
    }

    SkewShape sh = par.shape;
    if (kind == IdentityKind::thick_strip) {
        if (par.a < 0 || par.b < 0 || par.c < 1)
            throw std::domain_error("thick_strip: need a,b >= 0 and c >= 1");
        if ((par.a + par.c) * (par.b + par.c) > 100)
            throw resource_error("thick_strip: rectangle too large to enumerate");
        std::vector<long> outer(par.a + par.c, par.b + par.c), inner(par.a, par.b);
        sh = SkewShape(Partition(outer), Partition(inner));
    }
    const Partition& la = sh.outer();
    const Partition& mu = sh.inner();

    long ell = 0;  // rect_symmetry: rows the rectangle's corner can reach
    if (kind == IdentityKind::rect_symmetry) {
        long p = mu.part(1), k = mu.length();
        for (long i = 1; i <= k; ++i)
            if (mu.part(i) != p)
                throw std::domain_error("rect_symmetry: inner shape must be a rectangle");
        if (p < k) throw std::domain_error("rect_symmetry: need p >= k");
        for (long i = 1; i <= la.length(); ++i)
            if (la.part(i) - i >= p - k) ell = i;
    }
    if ((kind == IdentityKind::slim_symmetry || kind == IdentityKind::slim_flip) &&
        !sh.slim())
        throw std::domain_error(identity_kind_name(kind) + ": shape is not slim");

    rep.trials = trials;
    for (long trial = 0; trial < trials; ++trial) {
        SplitMix64 rng(seed ^ (static_cast<std::uint64_t>(trial) + 1) *
                                  0x9E3779B97F4A7C15ULL);
        WeightSpec w;
        bool need_distinct_x = kind == IdentityKind::slim_symmetry;
        bool need_nonsingular =
            kind == IdentityKind::thick_strip || kind == IdentityKind::slim_flip;
        for (int attempt = 0;; ++attempt) {
            if (attempt == 200)
                throw std::domain_error("verify_identity: no nonsingular point found");
            w.x.assign(la.length(), 0);
            w.y.assign(la.part(1), 0);
            for (auto& r : w.x) r = rng.rat_in(1000);
            for (auto& r : w.y) r = rng.rat_in(1000);
            bool ok = true;
            if (need_distinct_x)
                for (size_t i = 0; ok && i < w.x.size(); ++i)
                    for (size_t j = i + 1; ok && j < w.x.size(); ++j)
                        if (w.x[i] == w.x[j]) ok = false;
            if (need_nonsingular)
                for (const Cell& c : la.cells())
                    if (w.x[c.i - 1] == w.y[c.j - 1]) ok = false;
            if (ok) break;
        }
        std::string pt = weight_point_str(w);
        auto record = [&](const std::string& note, const Rat& lhs, const Rat& rhs) {
            if (lhs != rhs)
                rep.failures.push_back({pt + note, rat_str(lhs), rat_str(rhs)});
        };

        switch (kind) {
            case IdentityKind::rect_symmetry: {
                Rat base = G_eval(sh, w);
                for (long t = 1; t < ell; ++t) {
                    WeightSpec sw = w;
                    std::swap(sw.x[t - 1], sw.x[t]);
                    record("; swap x_" + std::to_string(t), base, G_eval(sh, sw));
                }
                long p = mu.part(1), k = mu.length();
                FactorialSchurInput fs;
                fs.mu = mu;
                fs.d = ell;
                fs.x.assign(w.x.begin(), w.x.begin() + ell);
                fs.a.assign(w.y.begin(), w.y.begin() + (p + ell - k));
                record("; factorial Schur", base, factorial_schur(fs, SchurMethod::tableaux));
                break;
            }
            case IdentityKind::slim_symmetry: {
                Rat base = G_eval(sh, w);
                for (long t = 1; t < la.length(); ++t) {
                    WeightSpec sw = w;
                    std::swap(sw.x[t - 1], sw.x[t]);
                    record("; swap x_" + std::to_string(t), base, G_eval(sh, sw));
                }
                FactorialSchurInput fs;
                fs.mu = mu;
                fs.d = la.length();
                fs.x = w.x;
                fs.a.assign(w.y.begin(), w.y.begin() + la.part(la.length()));
                record("; factorial Schur", base,
                       factorial_schur(fs, SchurMethod::determinant));
                break;
            }
            case IdentityKind::thick_strip:
            case IdentityKind::slim_flip: {
                record("; F flip", F_eval(sh, w),
                       F_eval(sh, w, ExcitedVariant::NE));
                record("; G flip", G_eval(sh, w),
                       G_eval(sh, w, GMethod::sum, ExcitedVariant::NE));
                break;
            }
            default: throw std::logic_error("verify_identity: bad kind");
        }
    }
    return rep;
}

}  // namespace skewhook
