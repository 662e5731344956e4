#pragma once

#include "skewhook/lozenge.hpp"
#include "skewhook/products.hpp"
#include "skewhook/schubert.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace skewhook {

// desk-scale verification suite; each criterion reruns a bounded grid of
// exact checks and reports the first discrepancy verbatim

struct CriterionResult {
    std::string name;
    bool ok = true;
    long checks = 0;
    std::string detail;
    bool conjectural = false;
};

namespace verify_detail {

struct Checker {
    CriterionResult res;
    explicit Checker(std::string name) { res.name = std::move(name); }
    void require(bool cond, const std::string& what) {
        ++res.checks;
        if (!cond && res.ok) {
            res.ok = false;
            res.detail = what;
        }
    }
    CriterionResult done(const std::string& summary) {
        if (res.ok) res.detail = summary;
        return res;
    }
};

inline WeightSpec spaced_weights(SplitMix64& rng, long nx, long ny) {
    WeightSpec w;
    for (long i = 0; i < nx; ++i) w.x.push_back(rng.rat_in(9) + 100 * (i + 1));
    for (long j = 0; j < ny; ++j) w.y.push_back(rng.rat_in(9) - 20);
    return w;
}

}  // namespace verify_detail

inline CriterionResult criterion_golden_values() {
    verify_detail::Checker ck("golden values");
    ck.require(upsilon(parse_permutation("1432")) == 5, "upsilon(1432)");
    ck.require(enumerate_excited(parse_shape("[3,3,2]/[2,1]")).size() == 5,
               "|E([3,3,2]/[2,1])|");
    ck.require(enumerate_excited(parse_shape("[4,4,4]/[2,1]")).size() == 8,
               "|E([4,4,4]/[2,1])|");
    ck.require(box_count(3, 2, 3) == 175, "box(3,2,3)");
    ck.require(rpp_bounded_count(Partition::staircase(3), 1) == 5,
               "bounded reverse plane partitions over the staircase");
    ZigzagReport z = zigzag_bounds(1);
    ck.require(z.scale == Rat(54, 35), "zigzag scale");
    ck.require(z.lower == Rat(54, 6125), "zigzag lower bound");
    ck.require(z.upper == Rat(54, 245), "zigzag upper bound");
    ck.require(z.uniform == Rat(1, 7), "zigzag uniform probability");
    ck.require(z.has_exact && z.exact == Rat(246, 4375), "zigzag exact value");
    ck.require(z.lower <= z.exact && z.exact <= z.upper, "zigzag sandwich");
    ck.require(upsilon_shifted(family(PermFamily::w0, 3), 1) == 5,
               "shifted staircase evaluation");
    ck.require(upsilon_closed_form(UpsilonForm::staircase, 3, 1) == 5,
               "staircase closed form");
    ck.require(upsilon(parse_permutation("2143")) == 3, "upsilon(2143)");
    ck.require(upsilon(parse_permutation("214365")) == 15, "upsilon(214365)");
    ck.require(upsilon(family(PermFamily::x, 1)) == euler_number(3),
               "two-row zigzag vs alternating count");
    return ck.done("pinned paper values");
}

inline CriterionResult criterion_hook_formula() {
    verify_detail::Checker ck("hook formula vs tableaux oracle");
    for (long n = 0; n <= 8; ++n)
        for (const Partition& la : all_partitions(n))
            for (const Partition& mu : sub_partitions(la)) {
                SkewShape sh(la, mu);
                Rat lhs = Rat(factorial(sh.size())) * specialize_hooks_numeric(sh);
                Int rhs = syt_count_oracle(sh, SytMethod::determinant);
                ck.require(lhs == rhs, "shape " + sh.str());
            }
    return ck.done("all skew shapes with outer size up to 8");
}

inline CriterionResult criterion_product_formulas() {
    verify_detail::Checker ck("product formulas vs determinant");
    for (long a = 0; a <= 2; ++a)
        for (long b = 0; b <= 2; ++b)
            for (long c = 0; c <= 2; ++c)
                for (long d = 0; d <= 2; ++d)
                    for (long e = 0; e <= 2; ++e)
                        for (long m = 0; m <= 2; ++m) {
                            LambdaParams p{a, b, c, d, e, m};
                            SkewShape sh = build_lambda_shape(p);
                            if (sh.size() > 40) continue;
                            ck.require(f_lambda_product(p) == syt_count_det(sh),
                                       "params (" + std::to_string(a) + "," +
                                           std::to_string(b) + "," + std::to_string(c) +
                                           "," + std::to_string(d) + "," +
                                           std::to_string(e) + "," + std::to_string(m) +
                                           ")");
                        }
    return ck.done("six-parameter grid through 2, shapes up to 40 cells");
}

inline CriterionResult criterion_q_products() {
    verify_detail::Checker ck("q-products vs series oracle");
    for (long a = 0; a <= 2; ++a)
        for (long b = 0; b <= 2; ++b)
            for (long c = 0; c <= 2; ++c)
                for (long d = 0; d <= 2; ++d)
                    for (long e = 0; e <= 2; ++e) {
                        for (long m = 0; m <= 2; ++m) {
                            LambdaParams p{a, b, c, d, e, m};
                            SkewShape sh = build_lambda_shape(p);
                            if (sh.size() > 20) continue;
                            ck.require(q_lambda_product(p, 10) ==
                                           ssyt_series_oracle(sh, 10),
                                       "q-product at m=" + std::to_string(m));
                        }
                        SkewShape sh0 = build_lambda_shape({a, b, c, d, e, 0});
                        if (sh0.size() <= 20)
                            ck.require(q_corollary(CorollaryKind::abcde, a, b, c, d, e,
                                                   10) == ssyt_series_oracle(sh0, 10),
                                       "first corollary");
                        SkewShape sh1 = build_lambda_shape({a, b, c, d, e, 1});
                        if (sh1.size() <= 20)
                            ck.require(q_corollary(CorollaryKind::abcde1, a, b, c, d,
                                                   e, 10) == ssyt_series_oracle(sh1, 10),
                                       "third corollary");
                        if (d == 0 && e == 0 && sh1.size() <= 20)
                            ck.require(q_corollary(CorollaryKind::abc, a, b, c, 0, 0,
                                                   10) == ssyt_series_oracle(sh1, 10),
                                       "second corollary");
                    }
    return ck.done("series through q^10, shapes up to 20 cells");
}

inline CriterionResult criterion_schubert() {
    verify_detail::Checker ck("principal evaluations across methods");
    std::vector<long> line{1, 2, 3, 4, 5, 6};
    do {
        Permutation w(line);
        PermClass cls = classify(w);
        if (!cls.vexillary && !cls.avoid321) continue;
        Int base = upsilon(w, UpsilonMethod::macdonald);
        if (cls.vexillary)
            ck.require(upsilon(w, UpsilonMethod::vexillary_excited) == base,
                       "vexillary route at " + w.str());
        if (cls.avoid321)
            ck.require(upsilon(w, UpsilonMethod::skew321) == base,
                       "321-avoiding route at " + w.str());
    } while (std::next_permutation(line.begin(), line.end()));

    for (long n = 1; n <= 4; ++n)
        for (long c = 0; c <= 3; ++c)
            ck.require(upsilon_closed_form(UpsilonForm::staircase, n, c) ==
                           upsilon_shifted(family(PermFamily::w0, n), c),
                       "staircase form n=" + std::to_string(n) +
                           " c=" + std::to_string(c));
    for (long a = 1; a <= 3; ++a)
        for (long b = 1; b <= 3; ++b)
            for (long c = 0; c <= 3; ++c)
                ck.require(upsilon_closed_form(UpsilonForm::box, a, b, c) ==
                               upsilon_shifted(family(PermFamily::box, a, b), c),
                           "box form a=" + std::to_string(a) + " b=" +
                               std::to_string(b) + " c=" + std::to_string(c));
    for (long c = 1; c <= 2; ++c)
        ck.require(upsilon_closed_form(UpsilonForm::rest2413, 1, c) ==
                       upsilon_shifted(family(PermFamily::v2413, 1), c),
                   "restricted 2413 form c=" + std::to_string(c));
    ck.require(upsilon_closed_form(UpsilonForm::s351624, 1) ==
                   upsilon(family(PermFamily::s351624, 1)),
               "351624 block form");
    ck.require(upsilon_closed_form(UpsilonForm::dewitt, 1) ==
                   upsilon(family(PermFamily::dewitt, 1)),
               "staircase-minus-box form");
    for (long n = 1; n <= 2; ++n) {
        ck.require(upsilon_closed_form(UpsilonForm::x, n) ==
                       upsilon(family(PermFamily::x, n)),
                   "two-row zigzag n=" + std::to_string(n));
        ck.require(upsilon_closed_form(UpsilonForm::y, n) ==
                       upsilon(family(PermFamily::y, n)),
                   "three-row zigzag n=" + std::to_string(n));
        ck.require(upsilon_closed_form(UpsilonForm::z, n) ==
                       upsilon(family(PermFamily::z, n)),
                   "five-row zigzag n=" + std::to_string(n));
    }
    return ck.done("all vexillary and 321-avoiding members of S6, closed forms");
}

inline CriterionResult criterion_lozenge() {
    verify_detail::Checker ck("tiling determinants vs enumeration");
    SplitMix64 rng(20260819);
    auto sweep = [&](const TilingRegion& reg) {
        std::vector<LozengeTiling> all = enumerate_tilings(reg);
        long nx = reg.shape.outer().length(), ny = reg.shape.outer().part(1);
        for (int rep = 0; rep < 20; ++rep) {
            WeightSpec w = verify_detail::spaced_weights(rng, nx, ny);
            Rat brute = 0;
            for (const LozengeTiling& T : all) brute += tiling_weight(T, w);
            ck.require(partition_function(reg, w) == brute,
                       "determinant at " + reg.shape.str());
        }
    };
    for (const Partition& mu : sub_partitions(Partition{3, 3, 3}))
        for (long d = 0; d <= 3; ++d) sweep(region_height(mu, d));
    for (long a = 1; a <= 3; ++a)
        for (long b = 1; b <= 3; ++b)
            for (long c = 1; c <= 3; ++c) sweep(region_hexagon(a, b, c));

    for (const Partition& mu : sub_partitions(Partition{3, 3, 3}))
        for (long d = 0; d <= 3; ++d)
            ck.require(qvolume_det(mu, d) == pp_bounded_qgf(mu, d),
                       "volume series over " + mu.str() + " height " +
                           std::to_string(d));

    for (long a = 1; a <= 3; ++a)
        for (long b = 1; b <= 3; ++b)
            for (long c = 1; c <= 3; ++c) {
                WeightSpec w;
                for (long i = 0; i < a + c; ++i)
                    w.x.push_back(rng.rat_in(9) + 40 * (i + 1));
                for (long j = 0; j < b + c; ++j) w.y.push_back(rng.rat_in(9));
                long h = (c - 1) / 2;
                Rat sum = 0;
                for (const Partition& mu :
                     sub_partitions(Partition(std::vector<long>(a, b))))
                    sum += path_probability(path_from_base(a, b, c, mu, h), w);
                ck.require(sum == 1, "path probabilities over the " +
                                         std::to_string(a) + "x" + std::to_string(b) +
                                         "x" + std::to_string(c) + " hexagon");
            }
    return ck.done("bases in 3x3 with height up to 3, hexagons up to 3x3x3");
}

inline CriterionResult criterion_identity_suites() {
    verify_detail::Checker ck("multivariate identity suites");
    auto run = [&](IdentityKind kind, const std::vector<IdentityParams>& grid) {
        for (long t = 0; t < 50; ++t) {
            const IdentityParams& par = grid[t % grid.size()];
            IdentityReport rep =
                verify_identity(kind, par, 1, 1000 + static_cast<std::uint64_t>(t));
            ck.require(rep.ok(), rep.kind + (rep.failures.empty()
                                                 ? ""
                                                 : " at " + rep.failures[0].point));
        }
    };

    std::vector<IdentityParams> rect;
    for (const char* text :
         {"[3,3,2]/[1]", "[2,1]/[1]", "[4,2,2]/[1]", "[4,3,2]/[2]", "[3,3]/[2]",
          "[4,4,3,2]/[2,2]", "[5,4,4,2]/[2,2]", "[5,4]/[3]", "[4,4,1]/[3]",
          "[5,5,3]/[3,3]", "[5,5,4,2]/[3,3]", "[5,5,5,2]/[3,3,3]"}) {
        IdentityParams p;
        p.shape = parse_shape(text);
        rect.push_back(p);
    }
    run(IdentityKind::rect_symmetry, rect);

    std::vector<IdentityParams> slim;
    for (const Partition& la : sub_partitions(Partition{6, 6, 6}))
        for (const Partition& mu : sub_partitions(la)) {
            if (la.size() == 0 || la.size() == mu.size()) continue;
            SkewShape sh(la, mu);
            if (!sh.slim()) continue;
            IdentityParams p;
            p.shape = std::move(sh);
            slim.push_back(p);
        }
    run(IdentityKind::slim_symmetry, slim);
    run(IdentityKind::slim_flip, slim);

    std::vector<IdentityParams> strip;
    for (long a = 1; a <= 3; ++a)
        for (long b = 1; b <= 3; ++b)
            for (long c = 1; c <= 3; ++c) {
                IdentityParams p;
                p.a = a;
                p.b = b;
                p.c = c;
                strip.push_back(p);
            }
    run(IdentityKind::thick_strip, strip);

    std::vector<IdentityParams> hookpath;
    for (long a = 1; a <= 3; ++a)
        for (long b = 1; b <= 3; ++b) {
            IdentityParams p;
            p.a = a;
            p.b = b;
            hookpath.push_back(p);
        }
    run(IdentityKind::reverse_hook_path, hookpath);
    return ck.done("five suites, 50 seeded points each");
}

inline CriterionResult criterion_racah() {
    verify_detail::Checker ck("two-parameter box identity");
    SplitMix64 rng(77);
    for (long a = 1; a <= 3; ++a)
        for (long b = 1; b <= 3; ++b)
            for (long c = 1; c <= 3; ++c) {
                long found = 0, attempts = 0;
                while (found < 10 && attempts < 400) {
                    ++attempts;
                    Rat q = rng.rat_in(7), u = rng.rat_in(7);
                    if (q == 0) continue;
                    try {
                        RacahReport r = racah_verify(a, b, c, q, u);
                        ck.require(r.equal, "box " + std::to_string(a) + "x" +
                                                std::to_string(b) + "x" +
                                                std::to_string(c) + " at q=" +
                                                rat_str(q) + " u=" + rat_str(u));
                        ++found;
                    } catch (const std::domain_error&) {
                    }
                }
                ck.require(found == 10, "nonsingular points for box " +
                                            std::to_string(a) + "x" +
                                            std::to_string(b) + "x" +
                                            std::to_string(c));
                RacahReport r0 = racah_verify(a, b, c, Rat(1, 2), Rat(0));
                ck.require(r0.equal && r0.lhs == box_qgf(a, b, c).eval(Rat(1, 2)),
                           "volume series specialization for box " +
                               std::to_string(a) + "x" + std::to_string(b) + "x" +
                               std::to_string(c));
            }
    return ck.done("boxes up to 3x3x3, 10 nonsingular points each");
}

inline CriterionResult criterion_sampler() {
    verify_detail::Checker ck("metropolis sampler laws");
    SplitMix64 rng(13);
    for (const Partition& mu : {Partition{1}, Partition{2, 2}}) {
        long d = mu.part(1) == 1 ? 1 : 2;
        TilingRegion reg = region_height(mu, d);
        long n = mu.size();
        std::vector<LozengeTiling> all = enumerate_tilings(reg);
        std::vector<WeightSpec> points{
            hook_point(reg.shape.outer()),
            verify_detail::spaced_weights(rng, mu.length() + d, mu.part(1) + d)};
        for (const WeightSpec& w : points)
            for (const LozengeTiling& T : all)
                for (const LozengeTiling& U : all) {
                    long diffs = 0, ci = 0, cj = 0;
                    for (long i = 1; i <= mu.length(); ++i)
                        for (long j = 1; j <= mu.part(i); ++j)
                            if (T.shift[i - 1][j - 1] != U.shift[i - 1][j - 1]) {
                                ++diffs;
                                ci = i;
                                cj = j;
                            }
                    if (diffs != 1) continue;
                    long t = T.shift[ci - 1][cj - 1], t2 = U.shift[ci - 1][cj - 1];
                    if (t2 != t + 1 && t2 != t - 1) continue;
                    Rat fwd = (w.x[ci - 1 + t2] - w.y[cj - 1 + t2]) /
                              (w.x[ci - 1 + t] - w.y[cj - 1 + t]);
                    Rat pTU = fwd < 1 ? fwd : Rat(1), pUT = fwd < 1 ? Rat(1) : 1 / fwd;
                    pTU /= Rat(2 * n);
                    pUT /= Rat(2 * n);
                    ck.require(tiling_weight(T, w) * pTU == tiling_weight(U, w) * pUT,
                               "detailed balance over " + mu.str());
                }
    }

    SamplerConfig cfg;
    cfg.region = region_height(Partition{1}, 1);
    cfg.steps = 100000;
    cfg.seed = 42;
    long occ = 0;
    metropolis_sample(cfg, [&](const LozengeTiling& T) { occ += T.shift[0][0]; });
    double freq = static_cast<double>(occ) / 100000;
    ck.require(freq > 0.48 && freq < 0.52, "uniform two-state frequency");

    cfg.mode = TilingWeightMode::explicit_spec;
    cfg.weights.x = {Rat(1), Rat(3)};
    cfg.weights.y = {Rat(0), Rat(0)};
    occ = 0;
    metropolis_sample(cfg, [&](const LozengeTiling& T) { occ += T.shift[0][0]; });
    freq = static_cast<double>(occ) / 100000;
    ck.require(freq > 0.73 && freq < 0.77, "weighted two-state frequency");

    SamplerConfig big;
    big.region = region_height(Partition{2, 2}, 2);
    big.mode = TilingWeightMode::hook;
    big.hook_shape = big.region.shape.outer();
    big.steps = 4000;
    big.seed = 99;
    std::vector<LozengeTiling> tr1, tr2;
    metropolis_sample(big, [&](const LozengeTiling& T) { tr1.push_back(T); });
    metropolis_sample(big, [&](const LozengeTiling& T) { tr2.push_back(T); });
    ck.require(tr1 == tr2, "bit-identical resample");
    return ck.done("exact balance, frequencies in 0.02, reproducible seeds");
}

inline CriterionResult criterion_conjectures() {
    verify_detail::Checker ck("conjectural closed forms (report only)");
    ck.res.conjectural = true;
    long agree = 0, total = 0;
    for (long a = 1; a <= 2; ++a)
        for (long c = 0; c <= 3; ++c) {
            ConjectureReport r = conjecture_eval(ConjectureKind::schub_skew, a, c);
            ++total;
            if (r.equal) ++agree;
            ++ck.res.checks;
        }
    for (long a = 1; a <= 3; ++a) {
        ConjectureReport r = conjecture_eval(ConjectureKind::kratt, a);
        ++total;
        if (r.equal) ++agree;
        ++ck.res.checks;
    }
    return ck.done("CONJECTURAL: " + std::to_string(agree) + "/" +
                   std::to_string(total) + " grid points agree with the oracle");
}

inline std::vector<CriterionResult> run_acceptance(bool quick = false) {
    std::vector<CriterionResult> out;
    out.push_back(criterion_golden_values());
    if (quick) return out;
    out.push_back(criterion_hook_formula());
    out.push_back(criterion_product_formulas());
    out.push_back(criterion_q_products());
    out.push_back(criterion_schubert());
    out.push_back(criterion_lozenge());
    out.push_back(criterion_identity_suites());
    out.push_back(criterion_racah());
    out.push_back(criterion_sampler());
    out.push_back(criterion_conjectures());
    return out;
}

}  // namespace skewhook
