#include <catch2/catch_amalgamated.hpp>

#include "skewhook/factorials.hpp"
#include "skewhook/matrix.hpp"
#include "skewhook/prng.hpp"
#include "skewhook/qpoly.hpp"

using namespace skewhook;

namespace {

Rat det_cofactor(const RationalMatrix& m) {
    size_t n = m.rows();
    if (n == 0) return Rat(1);
    if (n == 1) return m.at(0, 0);
    Rat acc = 0;
    for (size_t j = 0; j < n; ++j) {
        RationalMatrix minor(n - 1, n - 1);
        for (size_t r = 1; r < n; ++r)
            for (size_t c = 0, cc = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(r - 1, cc++) = m.at(r, c);
            }
        Rat term = m.at(0, j) * det_cofactor(minor);
        acc += (j % 2 == 0) ? term : -term;
    }
    return acc;
}

QPolynomial poly_from_coeffs(std::initializer_list<long> cs) {
    QPolynomial p;
    long e = 0;
    for (long c : cs) p += QPolynomial::monomial(Int(c), e++);
    return p;
}

}  // namespace

TEST_CASE("special factorials at the pinned values") {
    CHECK(superfactorial(4) == 12);
    CHECK(superfactorial(1) == 1);
    CHECK(superfactorial(0) == 1);
    CHECK(super_doublefactorial(3) == 3);
    CHECK(super_doublefactorial(0) == 1);
    CHECK(super_doublefactorial(1) == 1);
    CHECK(falling_superfactorial(3, 1) == 3);
    CHECK(falling_superfactorial(5, 0) == 1);
    CHECK(double_superfactorial(0) == 1);
    CHECK(double_superfactorial(1) == 1);
    CHECK(double_superfactorial(2) == 1);
    CHECK(double_superfactorial(4) == 2);
    CHECK(double_superfactorial(6) == factorial(4) * factorial(2));
    CHECK(shifted_super_doublefactorial(0, 5) == 1);
    CHECK(shifted_super_doublefactorial(1, 5) == 1);
    CHECK(shifted_super_doublefactorial(3, 2) == double_factorial(3) * double_factorial(5));
    // Psi(n;0) = Psi(n)
    for (long n = 0; n <= 8; ++n)
        CHECK(shifted_super_doublefactorial(n, 0) == super_doublefactorial(n));
    CHECK(falling_factorial(Int(5), 2) == 20);
    CHECK(falling_factorial(Int(3), 3) == 6);
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(3, -1) == 0);
}

TEST_CASE("special_factorial dispatch and domain errors") {
    CHECK(special_factorial(FactorialKind::Superfactorial, 4) == 12);
    CHECK(special_factorial(FactorialKind::Factorial, 5) == 120);
    CHECK(special_factorial(FactorialKind::DoubleFactorial, 5) == 15);
    CHECK(special_factorial(FactorialKind::FallingFactorial, 5, 2) == 20);
    CHECK(special_factorial(FactorialKind::ShiftedSuperDoublefactorial, 3, 2) == 45);
    CHECK(special_factorial(FactorialKind::FallingSuperfactorial, 3, 1) == 3);
    CHECK_THROWS_AS(special_factorial(FactorialKind::Superfactorial, -1), std::domain_error);
    CHECK_THROWS_AS(special_factorial(FactorialKind::Factorial, -3), std::domain_error);
    CHECK_THROWS_AS(shifted_super_doublefactorial(3, -1), std::domain_error);
}

TEST_CASE("superfactorial recurrences up to 50") {
    for (long n = 0; n <= 50; ++n) {
        CHECK(superfactorial(n + 1) == superfactorial(n) * factorial(n));
        CHECK(super_doublefactorial(n + 1) ==
              super_doublefactorial(n) * double_factorial(2 * n - 1));
    }
}

TEST_CASE("q-analogues match their defining products") {
    CHECK(q_factorial(2) == poly_from_coeffs({1, -1, -1, 1}));
    CHECK(q_double_factorial(3) == QPolynomial::one_minus_q(1) * QPolynomial::one_minus_q(3));
    CHECK(q_double_factorial(4) == QPolynomial::one_minus_q(2) * QPolynomial::one_minus_q(4));
    CHECK(q_superfactorial(3) == q_factorial(1) * q_factorial(2));
    CHECK(q_superfactorial(0) == QPolynomial(1));
    CHECK(q_super_doublefactorial(3) == q_double_factorial(1) * q_double_factorial(3));
    CHECK(q_double_superfactorial(6) == q_factorial(4) * q_factorial(2));
    CHECK(q_shifted_super_doublefactorial(3, 2) ==
          q_double_factorial(3) * q_double_factorial(5));
    CHECK(q_special_factorial(FactorialKind::Superfactorial, 3) == q_superfactorial(3));
    CHECK_THROWS_AS(q_special_factorial(FactorialKind::FallingFactorial, 3, 1),
                    std::domain_error);
}

TEST_CASE("q-factorial divided by (1-q)^m recovers m! at q=1") {
    for (long m = 0; m <= 8; ++m) {
        QPolynomial den(1);
        for (long i = 0; i < m; ++i) den *= QPolynomial::one_minus_q(1);
        QPolynomial quotient = q_factorial(m).divide_exact(den);
        CHECK(quotient.eval(Rat(1)) == Rat(factorial(m)));
    }
}

TEST_CASE("det_exact on the pinned matrices") {
    RationalMatrix id2(2, 2);
    id2.at(0, 0) = 1;
    id2.at(1, 1) = 1;
    CHECK(det_exact(id2) == Rat(1));

    RationalMatrix m(2, 2);
    m.at(0, 0) = 1;
    m.at(0, 1) = 2;
    m.at(1, 0) = 3;
    m.at(1, 1) = 4;
    CHECK(det_exact(m) == Rat(-2));

    // Vandermonde rows [x^2, x, 1] so det = prod_{i<j} (x_i - x_j)
    RationalMatrix v(3, 3);
    long xs[3] = {1, 2, 3};
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) v.at(i, j) = Rat(pow_int(Int(xs[i]), 2 - j));
    CHECK(det_exact(v) == Rat(-2));

    RationalMatrix empty(0, 0);
    CHECK(det_exact(empty) == Rat(1));

    RationalMatrix rect(2, 3);
    CHECK_THROWS_AS(det_exact(rect), std::invalid_argument);

    RationalMatrix sing(3, 3);
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) sing.at(i, j) = Rat(i + j);
    CHECK(det_exact(sing) == Rat(0));
}

TEST_CASE("det_exact agrees with cofactor expansion on random matrices") {
    SplitMix64 rng(20240817);
    for (int trial = 0; trial < 100; ++trial) {
        size_t n = 1 + rng.below(4);
        RationalMatrix m(n, n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) m.at(i, j) = rng.rat_in(10);
        CHECK(det_exact(m) == det_cofactor(m));
    }
}

TEST_CASE("series expansion of the pinned ratios") {
    QSeries geo = QSeries::ratio(QPolynomial(1), QPolynomial::one_minus_q(1), 3);
    for (long k = 0; k <= 3; ++k) CHECK(geo[k] == 1);

    QPolynomial den = QPolynomial::one_minus_q(1) * QPolynomial::one_minus_q(1);
    QSeries s = QSeries::ratio(QPolynomial::monomial(Int(1), 1), den, 3);
    CHECK(s[0] == 0);
    CHECK(s[1] == 1);
    CHECK(s[2] == 2);
    CHECK(s[3] == 3);

    QSeries t = QSeries::ratio(QPolynomial::one_minus_q(2), QPolynomial::one_minus_q(1), 5);
    CHECK(t == QSeries::from_poly(poly_from_coeffs({1, 1}), 5));
}

TEST_CASE("series ratio rejects malformed inputs") {
    // numerator's lowest power below the denominator's
    CHECK_THROWS_AS(
        QSeries::ratio(QPolynomial(1), QPolynomial::monomial(Int(1), 1), 3),
        std::domain_error);
    // non-unit lowest coefficient
    CHECK_THROWS_AS(
        QSeries::ratio(QPolynomial(1), QPolynomial(2), 3),
        std::domain_error);
    CHECK_THROWS_AS(QSeries::ratio(QPolynomial(1), QPolynomial(), 3), std::domain_error);
}

TEST_CASE("ratio times denominator reproduces the numerator") {
    SplitMix64 rng(771);
    for (int trial = 0; trial < 60; ++trial) {
        long D = 8;
        QPolynomial den = QPolynomial(rng.coin() ? 1 : -1);
        for (int t = 0; t < 3; ++t)
            den += QPolynomial::monomial(Int(rng.int_in(-3, 3)), rng.int_in(1, 4));
        QPolynomial num;
        for (int t = 0; t < 4; ++t)
            num += QPolynomial::monomial(Int(rng.int_in(-5, 5)), rng.int_in(0, 5));
        long j = rng.int_in(0, 2);
        long k = j + rng.int_in(0, 2);
        QPolynomial num2 = (num * den).shifted(k);
        QPolynomial den2 = den.shifted(j);
        QSeries r = QSeries::ratio(num2, den2, D);
        CHECK(r * QSeries::from_poly(den2, D) == QSeries::from_poly(num2, D));
    }
}

TEST_CASE("polynomial exact division") {
    QPolynomial p = QPolynomial::one_minus_q(2).divide_exact(QPolynomial::one_minus_q(1));
    CHECK(p == poly_from_coeffs({1, 1}));
    // Laurent shift: (q^2 - q^4) / (q - q^2) = q + q^2
    QPolynomial num = QPolynomial::monomial(Int(1), 2) - QPolynomial::monomial(Int(1), 4);
    QPolynomial den = QPolynomial::monomial(Int(1), 1) - QPolynomial::monomial(Int(1), 2);
    CHECK(num.divide_exact(den) ==
          QPolynomial::monomial(Int(1), 1) + QPolynomial::monomial(Int(1), 2));
    CHECK_THROWS_AS(QPolynomial::one_minus_q(3).divide_exact(poly_from_coeffs({1, 1})),
                    std::domain_error);
}

TEST_CASE("det_poly matches expansion on a q-Vandermonde") {
    // entries q^{i*j} for i,j in 0..2
    std::vector<std::vector<QPolynomial>> a(3, std::vector<QPolynomial>(3));
    for (long i = 0; i < 3; ++i)
        for (long j = 0; j < 3; ++j) a[i][j] = QPolynomial::monomial(Int(1), i * j);
    // Vandermonde in x_i = q^i: prod_{i<j}(q^j - q^i)
    QPolynomial expect(1);
    for (long i = 0; i < 3; ++i)
        for (long j = i + 1; j < 3; ++j)
            expect *= QPolynomial::monomial(Int(1), j) - QPolynomial::monomial(Int(1), i);
    CHECK(det_poly(a) == expect);
}
