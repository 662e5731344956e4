#include "skewhook/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

using json = nlohmann::ordered_json;
using namespace skewhook;

namespace {

Rat parse_rat(const std::string& text) {
    if (text.empty()) throw parse_error("rational literal: empty");
    for (char ch : text)
        if (!std::isdigit(static_cast<unsigned char>(ch)) && ch != '-' && ch != '/')
            throw parse_error("rational literal: bad character in '" + text + "'");
    Rat r;
    if (r.set_str(text, 10) != 0)
        throw parse_error("rational literal: cannot read '" + text + "'");
    if (r.get_den() == 0) throw parse_error("rational literal: zero denominator");
    r.canonicalize();
    return r;
}

// "x=1,2,3;y=0,1/2" with exact rational entries
WeightSpec parse_weight_spec(const std::string& text) {
    size_t semi = text.find(';');
    if (text.rfind("x=", 0) != 0 || semi == std::string::npos ||
        text.compare(semi + 1, 2, "y=") != 0)
        throw parse_error("weights: expected 'x=...;y=...'");
    auto split = [](const std::string& s) {
        std::vector<Rat> out;
        if (s.empty()) return out;
        size_t start = 0;
        while (true) {
            size_t comma = s.find(',', start);
            out.push_back(parse_rat(s.substr(start, comma - start)));
            if (comma == std::string::npos) return out;
            start = comma + 1;
        }
    };
    WeightSpec w;
    w.x = split(text.substr(2, semi - 2));
    w.y = split(text.substr(semi + 3));
    return w;
}

std::vector<long> parse_triple(const std::string& text, const char* what) {
    std::vector<long> v;
    size_t start = 0;
    while (start <= text.size()) {
        size_t comma = text.find(',', start);
        std::string tok = text.substr(start, comma - start);
        try {
            size_t used = 0;
            v.push_back(std::stol(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw parse_error(std::string(what) + ": bad integer '" + tok + "'");
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (v.size() != 3)
        throw parse_error(std::string(what) + ": expected three comma-separated integers");
    return v;
}

Partition parse_base(const std::string& text) {
    SkewShape sh = parse_shape(text);
    if (sh.inner().size() != 0)
        throw parse_error("base: expected a plain partition like [2,1]");
    return sh.outer();
}

std::string poly_str(const QPolynomial& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (const auto& [e, c] : p.terms()) {
        Int a = c < 0 ? Int(-c) : c;
        if (s.empty()) {
            if (c < 0) s += "-";
        } else {
            s += c < 0 ? " - " : " + ";
        }
        bool bare = a == 1 && e != 0;
        if (!bare) s += a.get_str();
        if (e != 0) {
            if (!bare) s += "*";
            s += "q";
            if (e != 1) s += "^" + std::to_string(e);
        }
    }
    return s;
}

json poly_json(const QPolynomial& p) {
    json coeffs = json::array();
    long lo = p.is_zero() ? 0 : p.min_exp();
    long hi = p.is_zero() ? -1 : p.degree();
    for (long e = lo; e <= hi; ++e) coeffs.push_back(p.coeff(e).get_str());
    json out;
    out["min_exp"] = lo;
    out["coeffs"] = std::move(coeffs);
    out["display"] = poly_str(p);
    return out;
}

json series_json(const QSeries& s) {
    json coeffs = json::array();
    for (long k = 0; k <= s.order(); ++k) coeffs.push_back(s[k].get_str());
    json out;
    out["order"] = s.order();
    out["coeffs"] = std::move(coeffs);
    out["display"] = poly_str(s.to_poly());
    return out;
}

json tiling_json(const LozengeTiling& T) {
    json shift = json::array();
    for (const auto& row : T.shift) shift.push_back(row);
    json out;
    out["base"] = T.base.str();
    out["height"] = T.height;
    out["shift"] = std::move(shift);
    out["volume"] = T.volume();
    return out;
}

struct Emitter {
    std::string command;
    bool pretty = false;
    bool timing = false;
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

    int emit(json values, const std::string& provenance, int code = 0) const {
        json out;
        out["command"] = command;
        out["values"] = std::move(values);
        out["provenance"] = provenance;
        if (timing) {
            auto t1 = std::chrono::steady_clock::now();
            out["timing_ms"] =
                std::chrono::duration<double, std::milli>(t1 - t0).count();
        }
        std::cout << (pretty ? out.dump(2) : out.dump()) << "\n";
        return code;
    }
};

TilingRegion region_from(const std::string& hex, const std::string& base, long height) {
    if (!hex.empty()) {
        if (!base.empty())
            throw std::invalid_argument("give either --hexagon or --base, not both");
        std::vector<long> abc = parse_triple(hex, "hexagon");
        return region_hexagon(abc[0], abc[1], abc[2]);
    }
    if (base.empty())
        throw std::invalid_argument("a region needs --hexagon or --base with --height");
    return region_height(parse_base(base), height);
}

WeightSpec weights_for(const std::string& spec, const TilingRegion& reg) {
    const Partition& la = reg.shape.outer();
    if (spec == "uniform") return uniform_weights(la.length(), la.part(1));
    if (spec == "hook") return hook_point(la);
    return parse_weight_spec(spec);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact skew-shape combinatorics: hook formulas, excited diagrams,"
                 " principal Schubert evaluations, lozenge tilings"};
    app.require_subcommand(1);
    bool pretty = false, timing = false;
    app.add_flag("--pretty", pretty, "indent the JSON output");
    app.add_flag("--timing", timing, "add a timing_ms field to the output");

    std::function<int(Emitter&)> run;

    // syt
    auto* syt = app.add_subcommand("syt", "standard and semistandard tableau counts");
    syt->require_subcommand(1);
    {
        static std::string shape, method = "nhlf";
        static long bound = 20;
        auto* c = syt->add_subcommand("count", "count standard tableaux of a skew shape");
        c->add_option("--shape", shape, "skew shape, e.g. [3,3,2]/[2,1]")->required();
        c->add_option("--method", method, "nhlf, det, or backtrack");
        c->add_option("--bound", bound, "cell cap for the backtrack oracle");
        c->callback([&] {
            run = [&](Emitter& em) {
                SkewShape sh = parse_shape(shape);
                Int n;
                std::string prov = "oracle";
                if (method == "nhlf") {
                    n = nhlf_count(sh);
                    prov = "formula";
                } else if (method == "det") {
                    n = syt_count_oracle(sh, SytMethod::determinant);
                } else if (method == "backtrack") {
                    n = syt_count_oracle(sh, SytMethod::backtrack, bound);
                } else {
                    throw std::invalid_argument("unknown method '" + method + "'");
                }
                json v;
                v["shape"] = sh.str();
                v["method"] = method;
                v["count"] = n.get_str();
                return em.emit(std::move(v), prov);
            };
        });
    }
    {
        static std::string shape, method = "qnhlf";
        static long order = 10, max_cells = 64;
        auto* c = syt->add_subcommand(
            "qseries", "semistandard generating series in q, truncated");
        c->add_option("--shape", shape)->required();
        c->add_option("--order", order, "truncation order");
        c->add_option("--method", method, "qnhlf or ssyt");
        c->add_option("--max-cells", max_cells, "cell cap for the ssyt oracle");
        c->callback([&] {
            run = [&](Emitter& em) {
                SkewShape sh = parse_shape(shape);
                QSeries s(order);
                std::string prov = "oracle";
                if (method == "qnhlf") {
                    s = qnhlf_series(sh, order);
                    prov = "formula";
                } else if (method == "ssyt") {
                    s = ssyt_series_oracle(sh, order, max_cells);
                } else {
                    throw std::invalid_argument("unknown method '" + method + "'");
                }
                json v;
                v["shape"] = sh.str();
                v["method"] = method;
                v["series"] = series_json(s);
                return em.emit(std::move(v), prov);
            };
        });
    }

    // excited
    auto* exc = app.add_subcommand("excited", "excited diagrams of a skew shape");
    exc->require_subcommand(1);
    {
        static std::string shape, variant = "se", method = "enumerate";
        auto* c = exc->add_subcommand("count", "number of excited diagrams");
        c->add_option("--shape", shape)->required();
        c->add_option("--variant", variant, "se or ne");
        c->add_option("--method", method, "enumerate, determinant, or hook_content");
        c->callback([&] {
            run = [&](Emitter& em) {
                SkewShape sh = parse_shape(shape);
                Int n;
                std::string prov;
                ExcitedVariant var = variant == "ne" ? ExcitedVariant::NE
                                                     : ExcitedVariant::SE;
                if (variant != "se" && variant != "ne")
                    throw std::invalid_argument("unknown variant '" + variant + "'");
                if (method == "enumerate") {
                    n = Int(static_cast<unsigned long>(
                        enumerate_excited(sh, var).size()));
                    prov = "oracle";
                } else if (var == ExcitedVariant::NE) {
                    throw std::invalid_argument(
                        "ne variant only supports --method enumerate");
                } else if (method == "determinant") {
                    n = count_excited(sh, CountMethod::determinant);
                    prov = "formula";
                } else if (method == "hook_content") {
                    n = count_excited(sh, CountMethod::hook_content);
                    prov = "formula";
                } else {
                    throw std::invalid_argument("unknown method '" + method + "'");
                }
                json v;
                v["shape"] = sh.str();
                v["variant"] = variant;
                v["method"] = method;
                v["count"] = n.get_str();
                return em.emit(std::move(v), prov);
            };
        });
    }
    {
        static std::string shape, variant = "se";
        static long max_diagrams = 10000;
        auto* c = exc->add_subcommand("enumerate", "list the excited diagrams");
        c->add_option("--shape", shape)->required();
        c->add_option("--variant", variant, "se or ne");
        c->add_option("--max-diagrams", max_diagrams, "hard cap on the listing size");
        c->callback([&] {
            run = [&](Emitter& em) {
                SkewShape sh = parse_shape(shape);
                if (variant != "se" && variant != "ne")
                    throw std::invalid_argument("unknown variant '" + variant + "'");
                ExcitedVariant var = variant == "ne" ? ExcitedVariant::NE
                                                     : ExcitedVariant::SE;
                std::vector<CellSet> all = enumerate_excited(sh, var);
                if (static_cast<long>(all.size()) > max_diagrams)
                    throw resource_error("excited enumerate: " +
                                         std::to_string(all.size()) +
                                         " diagrams exceed --max-diagrams " +
                                         std::to_string(max_diagrams));
                json list = json::array();
                for (const CellSet& d : all) {
                    json cells = json::array();
                    for (const Cell& c0 : d) cells.push_back({c0.i, c0.j});
                    list.push_back(std::move(cells));
                }
                json v;
                v["shape"] = sh.str();
                v["variant"] = variant;
                v["count"] = all.size();
                v["diagrams"] = std::move(list);
                return em.emit(std::move(v), "oracle");
            };
        });
    }

    // multivar
    auto* mv = app.add_subcommand("multivar", "multivariate sum identities");
    mv->require_subcommand(1);
    {
        static std::string identity, shape;
        static long a = 0, b = 0, c = 0, trials = 20;
        static std::uint64_t seed = 42;
        auto* q = mv->add_subcommand(
            "verify", "check an identity at random rational points");
        q->add_option("--identity", identity,
                      "rect_symmetry, slim_symmetry, slim_flip, thick_strip, or "
                      "reverse_hook_path")
            ->required();
        q->add_option("--shape", shape, "skew shape for the shape-driven identities");
        q->add_option("--a", a);
        q->add_option("--b", b);
        q->add_option("--c", c);
        q->add_option("--trials", trials);
        q->add_option("--seed", seed);
        q->callback([&] {
            run = [&](Emitter& em) {
                IdentityParams par;
                if (!shape.empty()) par.shape = parse_shape(shape);
                par.a = a;
                par.b = b;
                par.c = c;
                IdentityReport rep =
                    verify_identity(parse_identity_kind(identity), par, trials, seed);
                json fails = json::array();
                for (const IdentityFailure& f : rep.failures) {
                    json row;
                    row["point"] = f.point;
                    row["lhs"] = f.lhs;
                    row["rhs"] = f.rhs;
                    fails.push_back(std::move(row));
                }
                json v;
                v["identity"] = rep.kind;
                if (!shape.empty()) v["shape"] = par.shape.str();
                v["trials"] = rep.trials;
                v["seed"] = seed;
                v["failures"] = std::move(fails);
                v["ok"] = rep.ok();
                return em.emit(std::move(v), "oracle", rep.ok() ? 0 : 2);
            };
        });
    }

    // product
    auto* pr = app.add_subcommand("product", "six-parameter product formulas");
    pr->require_subcommand(1);
    {
        static std::vector<long> params;
        static long order = -1;
        auto* c = pr->add_subcommand("eval", "evaluate a product formula");
        c->add_option("--params", params, "a b c d e m")->expected(6)->required();
        c->add_option("--order", order, "if set, the q-analogue truncated here");
        c->callback([&] {
            run = [&](Emitter& em) {
                LambdaParams p{params[0], params[1], params[2],
                               params[3], params[4], params[5]};
                SkewShape sh = build_lambda_shape(p);
                json v;
                v["params"] = params;
                v["shape"] = sh.str();
                v["cells"] = sh.size();
                if (order >= 0)
                    v["series"] = series_json(q_lambda_product(p, order));
                else
                    v["count"] = f_lambda_product(p).get_str();
                return em.emit(std::move(v), "formula");
            };
        });
    }
    {
        static std::vector<long> params;
        auto* c = pr->add_subcommand(
            "verify", "product identity between straight and skew counts");
        c->add_option("--params", params, "a c d e")->expected(4)->required();
        c->callback([&] {
            run = [&](Emitter& em) {
                SytIdentityReport rep = verify_syt_identity(params[0], params[1],
                                                            params[2], params[3]);
                json v;
                v["params"] = params;
                v["shape"] = rep.shape.str();
                v["lhs"] = rep.lhs.get_str();
                v["rhs"] = rep.rhs.get_str();
                v["ok"] = rep.equal;
                return em.emit(std::move(v), "formula", rep.equal ? 0 : 2);
            };
        });
    }
    {
        static std::string kind;
        static long a = 1, c = 0;
        auto* q = pr->add_subcommand(
            "conjecture", "report an unproven closed form against the oracle");
        q->add_option("--kind", kind, "schub_skew or kratt")->required();
        q->add_option("--a", a)->required();
        q->add_option("--c", c);
        q->callback([&] {
            run = [&](Emitter& em) {
                ConjectureReport rep = conjecture_eval(parse_conjecture_kind(kind), a, c);
                json v;
                v["kind"] = rep.kind;
                v["a"] = a;
                v["c"] = c;
                v["shape"] = rep.shape.str();
                v["conjectured"] = rat_str(rep.conjectured);
                v["computed"] = rep.computed.get_str();
                v["agree"] = rep.equal;
                return em.emit(std::move(v), ConjectureReport::provenance);
            };
        });
    }

    // schubert
    auto* sc = app.add_subcommand("schubert", "principal evaluations at 1");
    sc->require_subcommand(1);
    {
        static std::string perm, method = "auto", form;
        static long shift = 0, p1 = 0, p2 = 0, p3 = 0;
        auto* c = sc->add_subcommand("upsilon", "principal Schubert evaluation");
        c->add_option("--perm", perm, "one-line permutation, e.g. 1432 or 3,5,1,6,2,4");
        c->add_option("--method", method, "auto, macdonald, vexillary_excited, or skew321");
        c->add_option("--shift", shift, "evaluate the c-shifted variant (vexillary only)");
        c->add_option("--form", form, "closed form name instead of a permutation");
        c->add_option("--p1", p1);
        c->add_option("--p2", p2);
        c->add_option("--p3", p3);
        c->callback([&] {
            run = [&](Emitter& em) {
                json v;
                Int n;
                if (!form.empty()) {
                    if (!perm.empty())
                        throw std::invalid_argument("give either --perm or --form");
                    n = upsilon_closed_form(parse_upsilon_form(form), p1, p2, p3);
                    v["form"] = form;
                    v["p1"] = p1;
                    v["p2"] = p2;
                    v["p3"] = p3;
                } else {
                    if (perm.empty())
                        throw std::invalid_argument("--perm or --form is required");
                    Permutation w = parse_permutation(perm);
                    v["perm"] = w.str();
                    if (shift > 0) {
                        n = upsilon_shifted(w, shift);
                        v["shift"] = shift;
                        v["method"] = "vexillary_excited";
                    } else {
                        UpsilonMethod m = method == "auto" ? pick_upsilon_method(w)
                                                           : parse_upsilon_method(method);
                        n = upsilon(w, m);
                        v["method"] = upsilon_method_name(m);
                    }
                }
                v["value"] = n.get_str();
                return em.emit(std::move(v), "formula");
            };
        });
    }
    {
        static std::string fam;
        static long n = 1, b = 0;
        static bool with_upsilon = false;
        auto* c = sc->add_subcommand("family", "named permutation families");
        c->add_option("--family", fam, "w0, u, v, w, s, t, doublefact, x, y, or z")
            ->required();
        c->add_option("--n", n)->required();
        c->add_option("--b", b, "second box side for the u family");
        c->add_flag("--upsilon", with_upsilon, "also evaluate upsilon");
        c->callback([&] {
            run = [&](Emitter& em) {
                Permutation w = family(parse_perm_family(fam), n, b);
                json v;
                v["family"] = fam;
                v["n"] = n;
                if (b > 0) v["b"] = b;
                v["perm"] = w.str();
                if (with_upsilon) {
                    UpsilonMethod m = pick_upsilon_method(w);
                    v["upsilon"] = upsilon(w, m).get_str();
                    v["method"] = upsilon_method_name(m);
                }
                return em.emit(std::move(v), "formula");
            };
        });
    }
    {
        static std::string perm;
        auto* c = sc->add_subcommand("classify", "pattern classes of a permutation");
        c->add_option("--perm", perm)->required();
        c->callback([&] {
            run = [&](Emitter& em) {
                Permutation w = parse_permutation(perm);
                PermClass cls = classify(w);
                json v;
                v["perm"] = w.str();
                v["vexillary"] = cls.vexillary;
                v["avoid321"] = cls.avoid321;
                v["dominant"] = cls.dominant;
                v["grassmannian"] = cls.grassmannian;
                v["recommended_method"] = upsilon_method_name(pick_upsilon_method(w));
                return em.emit(std::move(v), "formula");
            };
        });
    }

    // lozenge
    auto* lz = app.add_subcommand("lozenge", "weighted lozenge tilings");
    lz->require_subcommand(1);
    {
        static std::string hex, base, weights = "uniform", method = "auto";
        static long height = 0, max_tilings = 200000;
        auto* c = lz->add_subcommand("zf", "partition function of a tiling region");
        c->add_option("--hexagon", hex, "a,b,c");
        c->add_option("--base", base, "base partition, e.g. [2,1]");
        c->add_option("--height", height, "height above the base");
        c->add_option("--weights", weights, "uniform, hook, or x=...;y=...");
        c->add_option("--method", method, "auto, determinant, or enumerate");
        c->add_option("--max-tilings", max_tilings, "cap for the enumeration route");
        c->callback([&] {
            run = [&](Emitter& em) {
                TilingRegion reg = region_from(hex, base, height);
                WeightSpec w = weights_for(weights, reg);
                Rat z;
                std::string used = method, prov = "formula";
                auto enumerate_route = [&]() -> Rat {
                    std::vector<LozengeTiling> all = enumerate_tilings(reg);
                    if (static_cast<long>(all.size()) > max_tilings)
                        throw resource_error("lozenge zf: " +
                                             std::to_string(all.size()) +
                                             " tilings exceed --max-tilings " +
                                             std::to_string(max_tilings));
                    Rat total = 0;
                    for (const LozengeTiling& T : all) total += tiling_weight(T, w);
                    return total;
                };
                if (method == "determinant") {
                    z = partition_function(reg, w);
                } else if (method == "enumerate") {
                    z = enumerate_route();
                    prov = "oracle";
                } else if (method == "auto") {
                    try {
                        z = partition_function(reg, w);
                        used = "determinant";
                    } catch (const singularity_error&) {
                        z = enumerate_route();
                        used = "enumerate";
                        prov = "oracle";
                    }
                } else {
                    throw std::invalid_argument("unknown method '" + method + "'");
                }
                json v;
                v["region"] = reg.shape.str();
                v["height"] = reg.height;
                v["weights"] = weights;
                v["method"] = used;
                v["value"] = rat_str(z);
                return em.emit(std::move(v), prov);
            };
        });
    }
    {
        static std::string hex, base, weights = "hook", method = "determinant";
        static long cut = 0;
        auto* c = lz->add_subcommand(
            "prob", "probability that a random tiling has the given border path");
        c->add_option("--hexagon", hex, "a,b,c")->required();
        c->add_option("--base", base, "level surface at the cut")->required();
        c->add_option("--cut", cut, "height of the horizontal cut");
        c->add_option("--weights", weights, "uniform, hook, or x=...;y=...");
        c->add_option("--method", method, "determinant or enumerate");
        c->callback([&] {
            run = [&](Emitter& em) {
                std::vector<long> abc = parse_triple(hex, "hexagon");
                HexPath p = path_from_base(abc[0], abc[1], abc[2], parse_base(base), cut);
                TilingRegion reg = region_hexagon(abc[0], abc[1], abc[2]);
                WeightSpec w = weights_for(weights, reg);
                CountMethod m;
                std::string prov;
                if (method == "determinant") {
                    m = CountMethod::determinant;
                    prov = "formula";
                } else if (method == "enumerate") {
                    m = CountMethod::enumerate;
                    prov = "oracle";
                } else {
                    throw std::invalid_argument("unknown method '" + method + "'");
                }
                Rat pr = path_probability(p, w, m);
                json v;
                v["hexagon"] = {p.a, p.b, p.c};
                v["base"] = path_base(p).str();
                v["cobase"] = path_cobase(p).str();
                v["cut"] = cut;
                v["depths"] = p.depth;
                v["weights"] = weights;
                v["method"] = method;
                v["probability"] = rat_str(pr);
                return em.emit(std::move(v), prov);
            };
        });
    }
    {
        static std::string base;
        static long height = 0;
        auto* c = lz->add_subcommand(
            "qvolume", "volume generating polynomial of bounded tilings");
        c->add_option("--base", base)->required();
        c->add_option("--height", height)->required();
        c->callback([&] {
            run = [&](Emitter& em) {
                Partition mu = parse_base(base);
                QPolynomial p = qvolume_det(mu, height);
                json v;
                v["base"] = mu.str();
                v["height"] = height;
                v["polynomial"] = poly_json(p);
                v["count"] = p.eval(Rat(1)).get_num().get_str();
                return em.emit(std::move(v), "formula");
            };
        });
    }
    {
        static std::string hex, base, weights = "uniform", hook_shape;
        static long height = 0, steps = 1000;
        static std::uint64_t seed = 42;
        auto* c = lz->add_subcommand("sample", "Metropolis sampling of weighted tilings");
        c->add_option("--hexagon", hex, "a,b,c");
        c->add_option("--base", base);
        c->add_option("--height", height);
        c->add_option("--weights", weights, "uniform, hook, or x=...;y=...");
        c->add_option("--hook-shape", hook_shape, "partition for hook weights");
        c->add_option("--steps", steps);
        c->add_option("--seed", seed);
        c->callback([&] {
            run = [&](Emitter& em) {
                SamplerConfig cfg;
                cfg.region = region_from(hex, base, height);
                if (weights == "uniform") {
                    cfg.mode = TilingWeightMode::uniform;
                } else if (weights == "hook") {
                    cfg.mode = TilingWeightMode::hook;
                    cfg.hook_shape = hook_shape.empty() ? cfg.region.shape.outer()
                                                        : parse_base(hook_shape);
                } else {
                    cfg.mode = TilingWeightMode::explicit_spec;
                    cfg.weights = parse_weight_spec(weights);
                }
                cfg.steps = steps;
                cfg.seed = seed;
                SampleStats st = metropolis_sample(cfg);
                json v;
                v["region"] = cfg.region.shape.str();
                v["height"] = cfg.region.height;
                v["weights"] = weights;
                v["steps"] = steps;
                v["seed"] = seed;
                v["proposals"] = st.proposals;
                v["accepted"] = st.accepted;
                v["tiling"] = tiling_json(st.tiling);
                v["weight"] = rat_str(tiling_weight(st.tiling, sampler_weights(cfg)));
                return em.emit(std::move(v), "oracle");
            };
        });
    }
    {
        static std::string hex, base, weights = "uniform", hook_shape, out;
        static long height = 0, steps = 0, unit = 24;
        static std::uint64_t seed = 42;
        auto* c = lz->add_subcommand("render", "draw a sampled tiling as SVG");
        c->add_option("--hexagon", hex, "a,b,c");
        c->add_option("--base", base);
        c->add_option("--height", height);
        c->add_option("--weights", weights, "uniform, hook, or x=...;y=...");
        c->add_option("--hook-shape", hook_shape);
        c->add_option("--steps", steps, "0 renders the minimal tiling");
        c->add_option("--seed", seed);
        c->add_option("--unit", unit, "pixels per lattice step");
        c->add_option("--out", out, "output SVG path")->required();
        c->callback([&] {
            run = [&](Emitter& em) {
                SamplerConfig cfg;
                cfg.region = region_from(hex, base, height);
                if (weights == "uniform") {
                    cfg.mode = TilingWeightMode::uniform;
                } else if (weights == "hook") {
                    cfg.mode = TilingWeightMode::hook;
                    cfg.hook_shape = hook_shape.empty() ? cfg.region.shape.outer()
                                                        : parse_base(hook_shape);
                } else {
                    cfg.mode = TilingWeightMode::explicit_spec;
                    cfg.weights = parse_weight_spec(weights);
                }
                cfg.steps = steps;
                cfg.seed = seed;
                SampleStats st = metropolis_sample(cfg);
                SvgStyle style;
                style.unit = unit;
                std::string svg = render_svg(st.tiling, style);
                std::ofstream f(out, std::ios::binary);
                if (!f) throw std::invalid_argument("cannot open '" + out + "'");
                f << svg;
                f.close();
                json v;
                v["region"] = cfg.region.shape.str();
                v["height"] = cfg.region.height;
                v["steps"] = steps;
                v["seed"] = seed;
                v["tiling"] = tiling_json(st.tiling);
                v["out"] = out;
                v["bytes"] = svg.size();
                return em.emit(std::move(v), "oracle");
            };
        });
    }
    {
        static std::string box, qtext, utext;
        static long h = 0;
        static bool use_h = false;
        auto* c = lz->add_subcommand(
            "racah", "telescoping two-parameter identity over a box");
        c->add_option("--box", box, "a,b,c")->required();
        c->add_option("--q", qtext, "rational q");
        c->add_option("--u", utext, "rational u");
        c->add_option("--h", h, "integer specialization u = q^h")->excludes("--q");
        c->callback([&, c] {
            use_h = c->count("--h") > 0;
            run = [&](Emitter& em) {
                std::vector<long> abc = parse_triple(box, "box");
                RacahReport rep;
                json v;
                v["box"] = {abc[0], abc[1], abc[2]};
                if (use_h) {
                    rep = racah_verify_h(abc[0], abc[1], abc[2], h);
                    v["h"] = h;
                } else {
                    if (qtext.empty() || utext.empty())
                        throw std::invalid_argument("need --q and --u, or --h");
                    rep = racah_verify(abc[0], abc[1], abc[2], parse_rat(qtext),
                                       parse_rat(utext));
                    v["q"] = qtext;
                    v["u"] = utext;
                }
                v["lhs"] = rat_str(rep.lhs);
                v["rhs"] = rat_str(rep.rhs);
                v["ok"] = rep.equal;
                return em.emit(std::move(v), "formula", rep.equal ? 0 : 2);
            };
        });
    }

    // verify
    auto* vf = app.add_subcommand("verify", "run the verification suite");
    {
        static std::string level = "desk";
        auto* c = vf->add_subcommand("all", "every criterion, or the quick golden set");
        c->add_option("--level", level, "desk or quick");
        c->callback([&] {
            run = [&](Emitter& em) {
                bool quick = level == "quick";
                if (!quick && level != "desk")
                    throw std::invalid_argument("unknown level '" + level + "'");
                std::vector<CriterionResult> rs = run_acceptance(quick);
                bool all_ok = true;
                json list = json::array();
                for (const CriterionResult& r : rs) {
                    json row;
                    row["name"] = r.name;
                    row["ok"] = r.ok;
                    row["checks"] = r.checks;
                    row["detail"] = r.detail;
                    if (r.conjectural) row["provenance"] = "conjectural";
                    list.push_back(std::move(row));
                    if (!r.ok) all_ok = false;
                }
                json v;
                v["level"] = quick ? "quick" : "desk";
                v["criteria"] = std::move(list);
                v["ok"] = all_ok;
                return em.emit(std::move(v), "oracle", all_ok ? 0 : 2);
            };
        });
    }
    vf->require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        json err;
        err["error"] = e.what();
        std::cout << err.dump() << "\n";
        return 1;
    }
    if (!run) return 1;

    Emitter em;
    std::vector<std::string> names;
    for (const CLI::App* cur = &app; !cur->get_subcommands(false).empty();) {
        cur = cur->get_subcommands(false).front();
        names.push_back(cur->get_name());
    }
    for (const std::string& s : names) em.command += (em.command.empty() ? "" : " ") + s;
    em.pretty = pretty;
    em.timing = timing;
    try {
        return run(em);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        json err;
        err["command"] = em.command;
        err["error"] = e.what();
        std::cout << (pretty ? err.dump(2) : err.dump()) << "\n";
        return 1;
    }
}
