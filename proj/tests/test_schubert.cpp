#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <vector>

#include "skewhook/excited.hpp"
#include "skewhook/factorials.hpp"
#include "skewhook/prng.hpp"
#include "skewhook/schubert.hpp"
#include "skewhook/tableaux.hpp"

using namespace skewhook;

namespace {

// drop empty rows and leading empty columns so shapes compare up to position
SkewShape normalize_skew(const SkewShape& sh) {
    std::vector<long> la, mu;
    long shift = -1;
    for (long i = 1; i <= sh.outer().length(); ++i)
        if (sh.outer().part(i) > sh.inner().part(i)) {
            la.push_back(sh.outer().part(i));
            mu.push_back(sh.inner().part(i));
            if (shift < 0 || mu.back() < shift) shift = mu.back();
        }
    for (long& x : la) x -= shift;
    for (long& x : mu) x -= shift;
    return SkewShape(Partition(la), Partition(mu));
}

std::vector<Permutation> symmetric_group(long n) {
    std::vector<long> v(n);
    std::iota(v.begin(), v.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation(v));
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

SkewShape dewitt_shape(long a) {
    return SkewShape(Partition::staircase(4 * a),
                     Partition(std::vector<long>(a, a)));
}

SkewShape fat_hook_shape(long a) {
    std::vector<long> rows(2 * a, 3 * a);
    rows.insert(rows.end(), a, 2 * a);
    return SkewShape(Partition(rows), Partition(std::vector<long>(a, a)));
}

Int word_product(const std::vector<long>& word) {
    Int p(1);
    for (long r : word) p *= r;
    return p;
}

}  // namespace

TEST_CASE("one line notation round trips") {
    Permutation w = parse_permutation("1432");
    CHECK(w.size() == 4);
    CHECK(w(2) == 4);
    CHECK(w.str() == "1432");
    CHECK(w.length() == 3);
    CHECK(parse_permutation("3,5,1,6,2,4") == parse_permutation("351624"));
    CHECK(parse_permutation("10,3,1,2,4,5,6,7,8,9").size() == 10);
    CHECK(Permutation::identity(5).is_identity());
    CHECK(Permutation::identity(0).length() == 0);

    Permutation u = parse_permutation("2413");
    CHECK(u.inverse() == parse_permutation("3142"));
    CHECK(u * u.inverse() == Permutation::identity(4));
    CHECK(u.inverse().length() == u.length());

    CHECK(direct_sum(2, parse_permutation("21")) == parse_permutation("1243"));
    CHECK(direct_sum(0, u) == u);
    CHECK(kron(parse_permutation("2413"), 2) ==
          parse_permutation("3,4,7,8,1,2,5,6"));
    CHECK(kron(parse_permutation("21"), 1) == parse_permutation("21"));
    CHECK(kron(parse_permutation("21"), 3).length() == 9);

    CHECK_THROWS_AS(Permutation({1, 2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(parse_permutation("14x2"), parse_error);
    CHECK_THROWS_AS(parse_permutation(""), parse_error);
}

TEST_CASE("rothe diagrams pin their cells and essential corners") {
    PermDiagram d = rothe_diagram(parse_permutation("1432"));
    CHECK(d.cells == std::vector<Cell>{{2, 2}, {2, 3}, {3, 2}});
    CHECK(d.essential == std::vector<Cell>{{2, 3}, {3, 2}});

    PermDiagram big = rothe_diagram(parse_permutation("461532"));
    CHECK(big.cells.size() == 10);
    CHECK(big.essential == std::vector<Cell>{{2, 3}, {2, 5}, {4, 3}, {5, 2}});

    CHECK(rothe_diagram(Permutation::identity(4)).cells.empty());

    SplitMix64 rng(20240817);
    for (int t = 0; t < 10000; ++t) {
        std::vector<long> v(7);
        std::iota(v.begin(), v.end(), 1);
        for (long i = 6; i >= 1; --i)
            std::swap(v[i], v[static_cast<long>(rng.below(i + 1))]);
        Permutation w(std::move(v));
        CHECK(w.length() ==
              static_cast<long>(rothe_diagram(w).cells.size()));
    }
}

TEST_CASE("pattern classes") {
    CHECK(classify(parse_permutation("1432")).vexillary);
    CHECK_FALSE(classify(parse_permutation("2143")).vexillary);
    CHECK(classify(parse_permutation("461532")).vexillary);
    CHECK(classify(parse_permutation("251634")).avoid321);
    CHECK_FALSE(classify(parse_permutation("321")).avoid321);
    CHECK(classify(parse_permutation("3412")).dominant);
    CHECK_FALSE(classify(parse_permutation("132")).dominant);
    CHECK(classify(parse_permutation("1342")).grassmannian);
    CHECK_FALSE(classify(parse_permutation("1432")).grassmannian);

    for (const Permutation& w : symmetric_group(6)) {
        PermClass cls = classify(w);
        if (cls.dominant) CHECK(cls.vexillary);
        if (cls.grassmannian) CHECK(cls.vexillary);
    }
}

TEST_CASE("vexillary shape and supershape") {
    auto [mu1, la1] = vexillary_shapes(parse_permutation("1432"));
    CHECK(mu1 == Partition{2, 1});
    CHECK(la1 == Partition{3, 3, 2});

    auto [mu2, la2] = vexillary_shapes(parse_permutation("461532"));
    CHECK(mu2 == Partition{4, 3, 2, 1});
    CHECK(la2 == Partition{5, 5, 3, 3, 2});

    auto [mu3, la3] = vexillary_shapes(parse_permutation("3412"));
    CHECK(mu3 == Partition{2, 2});
    CHECK(la3 == Partition{2, 2});

    auto [mu4, la4] = vexillary_shapes(family(PermFamily::w0, 4));
    CHECK(mu4 == Partition::staircase(4));
    CHECK(la4 == Partition::staircase(4));

    CHECK(vexillary_shapes(family(PermFamily::schub, 2)).first ==
          Partition{3, 2, 1});
    CHECK(vexillary_shapes(direct_sum(1, family(PermFamily::schub, 2))).second ==
          Partition{5, 5, 5, 3, 3});

    CHECK_THROWS_AS(vexillary_shapes(parse_permutation("2143")),
                    std::domain_error);
}

TEST_CASE("reading words of skew shapes") {
    SkewShape d43(Partition::staircase(4), Partition::staircase(3));
    CHECK(shape_word(d43) == std::vector<long>{1, 3, 5});
    SkewShape d53(Partition::staircase(5), Partition::staircase(3));
    CHECK(shape_word(d53) == std::vector<long>{2, 1, 4, 3, 6, 5, 7});
    SkewShape hook(Partition{3, 3, 2}, Partition{1});
    CHECK(shape_word(hook) == std::vector<long>{2, 1, 4, 3, 2, 5, 4});
    CHECK(word_to_perm(shape_word(hook)) == parse_permutation("351624"));
    CHECK(word_to_perm({2, 1, 4, 3, 5}) == parse_permutation("315264"));
    CHECK(word_to_perm({1, 3, 5}).length() == 3);
    CHECK_THROWS_AS(word_to_perm({1, 1}), std::domain_error);

    CHECK(lexmin_word(parse_permutation("351624")) ==
          std::vector<long>{2, 1, 4, 3, 2, 5, 4});
    CHECK(lexmin_word(parse_permutation("2143")) == std::vector<long>{1, 3});

    CHECK(skewsh(parse_permutation("2143")) ==
          SkewShape(Partition{2, 1}, Partition{1}));
    CHECK(skewsh(parse_permutation("351624")) ==
          SkewShape(Partition{3, 3, 2}, Partition{1}));
    CHECK(skewsh(Permutation::identity(3)).size() == 0);
    CHECK_THROWS_AS(skewsh(parse_permutation("321")), std::domain_error);

    // connected shapes with at most five diagonals come back unchanged
    for (long n = 1; n <= 9; ++n)
        for (const Partition& la : all_partitions(n)) {
            if (la.part(1) + la.length() - 1 > 5) continue;
            for (const Partition& mu : sub_partitions(la)) {
                SkewShape sh(la, mu);
                if (sh.size() == 0 || !sh.connected()) continue;
                ShapePerm sp = shape_perm_correspondence(sh);
                REQUIRE(classify(sp.w).avoid321);
                CHECK(sp.w.length() == sh.size());
                CHECK(lexmin_word(sp.w) == sp.word);
                CHECK(skewsh(sp.w) == normalize_skew(sh));
            }
        }
}

TEST_CASE("reduced words stream without repeats") {
    CHECK(reduced_word_list(parse_permutation("1432")) ==
          std::vector<std::vector<long>>{{2, 3, 2}, {3, 2, 3}});
    CHECK(reduced_word_list(parse_permutation("321")) ==
          std::vector<std::vector<long>>{{1, 2, 1}, {2, 1, 2}});
    CHECK(reduced_word_list(Permutation::identity(3)) ==
          std::vector<std::vector<long>>{{}});

    long visited = reduced_words(parse_permutation("2143"),
                                 [](const std::vector<long>&) {});
    CHECK(visited == 2);

    // counts match standard tableaux of the associated shape
    for (const Permutation& w : symmetric_group(5)) {
        if (!classify(w).avoid321) continue;
        long count = reduced_words(w, [](const std::vector<long>&) {});
        CHECK(Int(count) == syt_count_det(skewsh(w)));
    }

    CHECK_THROWS_AS(reduced_words(family(PermFamily::w0, 4),
                                  [](const std::vector<long>&) {}, 3),
                    resource_error);
}

TEST_CASE("principal evaluations agree across methods") {
    CHECK(upsilon(parse_permutation("1432"), UpsilonMethod::macdonald) == 5);
    CHECK(upsilon(parse_permutation("1432"), UpsilonMethod::vexillary_excited) == 5);
    CHECK(upsilon(parse_permutation("2143"), UpsilonMethod::macdonald) == 3);
    CHECK(upsilon(parse_permutation("2143"), UpsilonMethod::skew321) == 3);
    CHECK(upsilon(parse_permutation("214365")) == 15);
    CHECK(upsilon(parse_permutation("321")) == 1);
    CHECK(upsilon(Permutation::identity(4)) == 1);
    CHECK(upsilon(parse_permutation("3142"), UpsilonMethod::skew321) == 2);

    CHECK(pick_upsilon_method(parse_permutation("1432")) ==
          UpsilonMethod::vexillary_excited);
    CHECK(pick_upsilon_method(parse_permutation("2143")) ==
          UpsilonMethod::skew321);
    CHECK(parse_upsilon_method("macdonald") == UpsilonMethod::macdonald);
    CHECK(upsilon_method_name(UpsilonMethod::skew321) == "skew321");

    for (const Permutation& w : symmetric_group(6)) {
        Int base = upsilon(w, UpsilonMethod::macdonald);
        PermClass cls = classify(w);
        if (cls.vexillary)
            CHECK(base == upsilon(w, UpsilonMethod::vexillary_excited));
        if (cls.avoid321) {
            CHECK(base == upsilon(w, UpsilonMethod::skew321));
            Int first(-1);
            reduced_words(w, [&](const std::vector<long>& word) {
                Int p = word_product(word);
                if (first < 0)
                    first = p;
                else
                    CHECK(p == first);
            });
        }
    }

    for (const Permutation& w : symmetric_group(4))
        CHECK(upsilon_shifted(w, 0) == upsilon(w));
    for (const Permutation& w : symmetric_group(3))
        for (long c = 1; c <= 2; ++c)
            CHECK(upsilon_shifted(w, c) == upsilon(direct_sum(c, w)));

    CHECK(upsilon_shifted(family(PermFamily::w0, 2), 1) == 2);
    CHECK(upsilon_shifted(family(PermFamily::w0, 3), 1) == 5);
}

TEST_CASE("dominant evaluations count bounded reverse plane partitions") {
    CHECK(diamond_shape(1, Partition{1}) == Partition{2, 2});
    CHECK(count_excited(SkewShape(diamond_shape(1, Partition{1}), Partition{1}),
                        CountMethod::determinant) == 2);

    for (const Permutation& w : symmetric_group(5)) {
        if (!classify(w).dominant) continue;
        Partition mu = vexillary_shapes(w).first;
        for (long c = 0; c <= 3; ++c) {
            Int ups = upsilon_shifted(w, c);
            CHECK(ups == rpp_bounded_count(mu, c));
            CHECK(ups == upsilon_dominant(w, c));
            SkewShape sh(diamond_shape(c, mu), mu);
            CHECK(ups == count_excited(sh, CountMethod::determinant));
        }
    }
    CHECK_THROWS_AS(upsilon_dominant(parse_permutation("132"), 1),
                    std::domain_error);
}

TEST_CASE("family constructors hit their pinned permutations") {
    CHECK(family(PermFamily::w0, 4) == parse_permutation("4321"));
    CHECK(family(PermFamily::box, 2, 2) == parse_permutation("3412"));
    CHECK(family(PermFamily::box, 1, 1) == parse_permutation("21"));
    CHECK(family(PermFamily::v2413, 1) == parse_permutation("2413"));
    CHECK(family(PermFamily::v2413, 2) == parse_permutation("3,4,7,8,1,2,5,6"));
    CHECK(family(PermFamily::schub, 1) == parse_permutation("321"));
    CHECK(family(PermFamily::schub, 2) == parse_permutation("35142"));
    CHECK(family(PermFamily::s351624, 1) == parse_permutation("351624"));
    CHECK(family(PermFamily::dewitt, 1) == parse_permutation("315264"));
    CHECK(family(PermFamily::doublefact, 2) == parse_permutation("2143"));
    CHECK(family(PermFamily::doublefact, 3) == parse_permutation("214365"));
    CHECK(family(PermFamily::x, 1) == parse_permutation("3142"));
    CHECK(family(PermFamily::x, 3) == parse_permutation("31527486"));
    CHECK(family(PermFamily::y, 1) == parse_permutation("3412"));

    CHECK(classify(family(PermFamily::w0, 5)).dominant);
    CHECK(classify(family(PermFamily::box, 3, 2)).dominant);
    for (long a = 1; a <= 2; ++a) {
        CHECK(classify(family(PermFamily::v2413, a)).vexillary);
        CHECK(classify(family(PermFamily::schub, a + 1)).vexillary);
        CHECK(classify(family(PermFamily::s351624, a)).avoid321);
        CHECK(classify(family(PermFamily::dewitt, a)).avoid321);
        CHECK(classify(family(PermFamily::x, a)).avoid321);
        CHECK(classify(family(PermFamily::y, a)).avoid321);
        CHECK(classify(family(PermFamily::z, a)).avoid321);
        CHECK(classify(family(PermFamily::doublefact, a + 1)).avoid321);
    }

    CHECK(skewsh(family(PermFamily::dewitt, 1)) ==
          normalize_skew(dewitt_shape(1)));
    CHECK(skewsh(family(PermFamily::s351624, 2)) ==
          normalize_skew(fat_hook_shape(2)));

    CHECK(parse_perm_family("doublefact") == PermFamily::doublefact);
    CHECK(perm_family_name(PermFamily::dewitt) == "t");
    CHECK_THROWS_AS(family(PermFamily::w0, 0), std::domain_error);
    CHECK_THROWS_AS(family(PermFamily::box, 2, 0), std::domain_error);
    CHECK_THROWS_AS(parse_perm_family("nope"), std::domain_error);
}

TEST_CASE("closed forms match direct evaluation") {
    for (long n = 1; n <= 4; ++n)
        for (long c = 0; c <= 3; ++c) {
            Int v = upsilon_closed_form(UpsilonForm::staircase, n, c);
            CHECK(v == upsilon_shifted(family(PermFamily::w0, n), c));
            CHECK(Rat(v) == proctor_product(n, c));
        }
    CHECK(upsilon_closed_form(UpsilonForm::staircase, 4, 1) == 14);

    for (long a = 1; a <= 3; ++a)
        for (long b = 1; b <= 3; ++b)
            for (long c = 0; c <= 2; ++c)
                CHECK(upsilon_closed_form(UpsilonForm::box, a, b, c) ==
                      upsilon_shifted(family(PermFamily::box, a, b), c));
    CHECK(upsilon_closed_form(UpsilonForm::box, 2, 2, 1) == 6);

    for (long c = 1; c <= 3; ++c)
        CHECK(upsilon_closed_form(UpsilonForm::rest2413, 1, c) ==
              upsilon_shifted(family(PermFamily::v2413, 1), c));
    for (long c = 2; c <= 3; ++c) {
        Int v = upsilon_closed_form(UpsilonForm::rest2413, 2, c);
        CHECK(v == upsilon(direct_sum(c, family(PermFamily::v2413, 2)),
                           UpsilonMethod::vexillary_excited));
    }
    CHECK(upsilon_closed_form(UpsilonForm::rest2413, 3, 3) == 561120560);
    CHECK(upsilon_closed_form(UpsilonForm::rest2413, 3, 3) ==
          upsilon(direct_sum(3, family(PermFamily::v2413, 3)),
                  UpsilonMethod::vexillary_excited));
    CHECK_THROWS_AS(upsilon_closed_form(UpsilonForm::rest2413, 2, 1),
                    std::domain_error);

    for (long a = 1; a <= 3; ++a)
        for (long c = 0; c <= 2; ++c)
            CHECK(upsilon_closed_form(UpsilonForm::schubperm, a, c) ==
                  upsilon_shifted(family(PermFamily::schub, a), c));
    CHECK(upsilon_closed_form(UpsilonForm::schubperm, 1, 1) == 5);
    CHECK(upsilon_closed_form(UpsilonForm::schubperm, 1, 0) == 1);

    for (long n = 1; n <= 4; ++n) {
        CHECK(upsilon_closed_form(UpsilonForm::zigzag, n) ==
              double_factorial(2 * n - 1));
        CHECK(upsilon_closed_form(UpsilonForm::zigzag, n) ==
              upsilon(family(PermFamily::doublefact, n)));
    }
    for (long n = 1; n <= 2; ++n)
        for (long a = 1; a <= 2; ++a)
            CHECK(upsilon_closed_form(UpsilonForm::zigzag_blocks, n, a) ==
                  upsilon(kron(family(PermFamily::doublefact, n), a),
                          UpsilonMethod::skew321));
    CHECK(upsilon_closed_form(UpsilonForm::zigzag_blocks, 1, 3) == 1);

    CHECK(upsilon_closed_form(UpsilonForm::x, 1) == 2);
    CHECK(upsilon_closed_form(UpsilonForm::x, 2) == 16);
    CHECK(upsilon_closed_form(UpsilonForm::x, 3) == 272);
    for (long n = 1; n <= 3; ++n) {
        CHECK(upsilon_closed_form(UpsilonForm::x, n) ==
              upsilon(family(PermFamily::x, n), UpsilonMethod::skew321));
        CHECK(upsilon_closed_form(UpsilonForm::y, n) ==
              upsilon(family(PermFamily::y, n), UpsilonMethod::skew321));
        CHECK(upsilon_closed_form(UpsilonForm::z, n) ==
              upsilon(family(PermFamily::z, n), UpsilonMethod::skew321));
    }
    CHECK(upsilon_closed_form(UpsilonForm::x, 2) ==
          upsilon(family(PermFamily::x, 2), UpsilonMethod::macdonald));
    CHECK(upsilon_closed_form(UpsilonForm::y, 1) == 1);
    CHECK(upsilon_closed_form(UpsilonForm::y, 2) == 8);
    CHECK(upsilon_closed_form(UpsilonForm::z, 1) == 1);
    CHECK(upsilon_closed_form(UpsilonForm::z, 2) == 15);

    CHECK(upsilon_closed_form(UpsilonForm::s351624, 1) == 8);
    for (long a = 1; a <= 2; ++a)
        CHECK(upsilon_closed_form(UpsilonForm::s351624, a) ==
              upsilon(family(PermFamily::s351624, a), UpsilonMethod::skew321));

    CHECK(upsilon_closed_form(UpsilonForm::dewitt, 1) == 16);
    CHECK(upsilon_closed_form(UpsilonForm::dewitt, 2) == 39321600);
    for (long a = 1; a <= 2; ++a)
        CHECK(upsilon_closed_form(UpsilonForm::dewitt, a) ==
              upsilon(family(PermFamily::dewitt, a), UpsilonMethod::skew321));

    CHECK(parse_upsilon_form("dewitt") == UpsilonForm::dewitt);
    CHECK(upsilon_form_name(UpsilonForm::zigzag_blocks) == "zigzag_blocks");
    CHECK_THROWS_AS(upsilon_closed_form(UpsilonForm::staircase, 0),
                    std::domain_error);
}

TEST_CASE("reading word products match their superfactorial forms") {
    for (long a = 1; a <= 2; ++a) {
        SkewShape sh = fat_hook_shape(a);
        Rat prod(superfactorial(3 * a) * superfactorial(3 * a) *
                 superfactorial(6 * a));
        prod /= pow_int(superfactorial(2 * a), 2) *
                pow_int(superfactorial(4 * a), 2);
        CHECK(Rat(word_product(shape_word(sh))) == prod);

        Rat f(factorial(7 * a * a) * pow_int(superfactorial(a), 5) *
              superfactorial(5 * a));
        f /= pow_int(superfactorial(2 * a), 2) * superfactorial(6 * a);
        CHECK(Rat(syt_count_det(sh)) == f);
    }

    for (long a = 1; a <= 2; ++a) {
        SkewShape sh = dewitt_shape(a);
        Rat prod(superfactorial(4 * a - 1) * superfactorial(8 * a - 2));
        prod /= superfactorial(3 * a - 1) * superfactorial(5 * a - 1) *
                double_superfactorial(8 * a - 2);
        CHECK(Rat(word_product(shape_word(sh))) == prod);

        long len = binomial(4 * a, 2).get_si() - a * a;
        // the squared variant of the superfactorial of 2a fails here at a = 2
        Rat f(factorial(len) * pow_int(superfactorial(a), 3) *
              superfactorial(3 * a) * super_doublefactorial(a) *
              super_doublefactorial(3 * a));
        f /= pow_int(superfactorial(2 * a), 3) *
             pow_int(super_doublefactorial(2 * a), 2) *
             super_doublefactorial(4 * a);
        CHECK(Rat(syt_count_det(sh)) == f);
    }
}
