#pragma once

#include "skewhook/factorials.hpp"
#include "skewhook/rational.hpp"

#include <map>
#include <vector>

namespace skewhook {

// Sparse polynomial in q with exact integer coefficients. Exponents may be
// negative while intermediate values are being assembled (q-power clearing in
// determinants); all externally meaningful results have min_exp() >= 0.
class QPolynomial {
public:
    QPolynomial() = default;
    explicit QPolynomial(const Int& c) {
        if (c != 0) c_[0] = c;
    }
    explicit QPolynomial(long c) : QPolynomial(Int(c)) {}

    static QPolynomial monomial(const Int& c, long e) {
        QPolynomial p;
        if (c != 0) p.c_[e] = c;
        return p;
    }
    // 1 - q^a (a >= 1)
    static QPolynomial one_minus_q(long a) {
        if (a <= 0) throw std::domain_error("one_minus_q: exponent must be positive");
        QPolynomial p;
        p.c_[0] = 1;
        p.c_[a] = -1;
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    long degree() const {
        if (is_zero()) throw std::domain_error("degree of zero polynomial");
        return c_.rbegin()->first;
    }
    long min_exp() const {
        if (is_zero()) throw std::domain_error("min_exp of zero polynomial");
        return c_.begin()->first;
    }
    Int coeff(long e) const {
        auto it = c_.find(e);
        return it == c_.end() ? Int(0) : it->second;
    }
    const std::map<long, Int>& terms() const { return c_; }

    QPolynomial& operator+=(const QPolynomial& o) {
        for (const auto& [e, c] : o.c_) {
            Int& v = c_[e];
            v += c;
            if (v == 0) c_.erase(e);
        }
        return *this;
    }
    QPolynomial& operator-=(const QPolynomial& o) {
        for (const auto& [e, c] : o.c_) {
            Int& v = c_[e];
            v -= c;
            if (v == 0) c_.erase(e);
        }
        return *this;
    }
    friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
    friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
    QPolynomial operator-() const {
        QPolynomial r;
        for (const auto& [e, c] : c_) r.c_[e] = -c;
        return r;
    }
    friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
        QPolynomial r;
        for (const auto& [ea, ca] : a.c_)
            for (const auto& [eb, cb] : b.c_) {
                Int& v = r.c_[ea + eb];
                v += ca * cb;
                if (v == 0) r.c_.erase(ea + eb);
            }
        return r;
    }
    QPolynomial& operator*=(const QPolynomial& o) { return *this = *this * o; }
    QPolynomial& operator*=(const Int& s) {
        if (s == 0) {
            c_.clear();
            return *this;
        }
        for (auto& [e, c] : c_) c *= s;
        return *this;
    }
    friend QPolynomial operator*(QPolynomial a, const Int& s) { return a *= s; }

    QPolynomial shifted(long d) const {  // multiply by q^d
        QPolynomial r;
        for (const auto& [e, c] : c_) r.c_[e + d] = c;
        return r;
    }

    QPolynomial stretched(long k) const {  // substitute q -> q^k
        if (k < 1) throw std::domain_error("QPolynomial::stretched: need k >= 1");
        QPolynomial r;
        for (const auto& [e, c] : c_) r.c_[e * k] = c;
        return r;
    }

    bool operator==(const QPolynomial& o) const { return c_ == o.c_; }

    Rat eval(const Rat& q0) const {
        Rat r = 0;
        for (const auto& [e, c] : c_) r += Rat(c) * pow_rat(q0, e);
        return r;
    }

    // Exact quotient; throws if *this is not divisible by den.
    QPolynomial divide_exact(const QPolynomial& den) const {
        if (den.is_zero()) throw std::domain_error("divide_exact: zero divisor");
        if (is_zero()) return QPolynomial();
        long shift = min_exp() - den.min_exp();
        std::vector<Int> n = dense(*this), d = dense(den);
        long dn = static_cast<long>(n.size()) - 1, dd = static_cast<long>(d.size()) - 1;
        if (dn < dd) throw std::domain_error("divide_exact: not divisible (degree)");
        std::vector<Int> quo(dn - dd + 1, Int(0));
        for (long k = dn - dd; k >= 0; --k) {
            if (n[k + dd] == 0) continue;
            Int q;
            if (!mpz_divisible_p(n[k + dd].get_mpz_t(), d[dd].get_mpz_t()))
                throw std::domain_error("divide_exact: not divisible (coefficient)");
            mpz_divexact(q.get_mpz_t(), n[k + dd].get_mpz_t(), d[dd].get_mpz_t());
            quo[k] = q;
            for (long t = 0; t <= dd; ++t) n[k + t] -= q * d[t];
        }
        for (const Int& rem : n)
            if (rem != 0) throw std::domain_error("divide_exact: nonzero remainder");
        QPolynomial r;
        for (long k = 0; k < static_cast<long>(quo.size()); ++k)
            if (quo[k] != 0) r.c_[k + shift] = quo[k];
        return r;
    }

private:
    // coefficients of p / q^{p.min_exp()} as a dense vector
    static std::vector<Int> dense(const QPolynomial& p) {
        long lo = p.min_exp();
        std::vector<Int> v(p.degree() - lo + 1, Int(0));
        for (const auto& [e, c] : p.c_) v[e - lo] = c;
        return v;
    }

    std::map<long, Int> c_;
};

// [m]! = (1-q)(1-q^2)...(1-q^m)
inline QPolynomial q_factorial(long m) {
    if (m < 0) throw std::domain_error("q_factorial: negative argument");
    QPolynomial r(1);
    for (long i = 1; i <= m; ++i) r *= QPolynomial::one_minus_q(i);
    return r;
}

// odd n: [n]!! = (1-q)(1-q^3)...(1-q^n); even n: (1-q^2)(1-q^4)...(1-q^n)
inline QPolynomial q_double_factorial(long n) {
    if (n < -1) throw std::domain_error("q_double_factorial: argument below -1");
    QPolynomial r(1);
    for (long i = n; i >= 1; i -= 2) r *= QPolynomial::one_minus_q(i);
    return r;
}

// Phi_q(n) = [1]! [2]! ... [n-1]!
inline QPolynomial q_superfactorial(long n) {
    if (n < 0) throw std::domain_error("q_superfactorial: negative argument");
    QPolynomial r(1);
    for (long i = 1; i < n; ++i) r *= q_factorial(i);
    return r;
}

// gimel_q(n) = [n-2]! [n-4]! ...
inline QPolynomial q_double_superfactorial(long n) {
    if (n < 0) throw std::domain_error("q_double_superfactorial: negative argument");
    QPolynomial r(1);
    for (long i = n - 2; i >= 2; i -= 2) r *= q_factorial(i);
    return r;
}

// Psi_q(n) = [1]!! [3]!! ... [2n-3]!!
inline QPolynomial q_super_doublefactorial(long n) {
    if (n < 0) throw std::domain_error("q_super_doublefactorial: negative argument");
    QPolynomial r(1);
    for (long i = 1; i <= n - 1; ++i) r *= q_double_factorial(2 * i - 1);
    return r;
}

// Psi_q(n;k) = [k+1]!! [k+3]!! ... [k+2n-3]!!
inline QPolynomial q_shifted_super_doublefactorial(long n, long k) {
    if (n < 0 || k < 0)
        throw std::domain_error("q_shifted_super_doublefactorial: negative argument");
    QPolynomial r(1);
    for (long i = 1; i <= n - 1; ++i) r *= q_double_factorial(k + 2 * i - 1);
    return r;
}

// q-analogue dispatcher; kinds without a q-variant reject their arguments.
inline QPolynomial q_special_factorial(FactorialKind kind, long a, long b = 0) {
    switch (kind) {
        case FactorialKind::Factorial: return q_factorial(a);
        case FactorialKind::DoubleFactorial:
            if (a < 0) throw std::domain_error("q_double_factorial: negative argument");
            return q_double_factorial(a);
        case FactorialKind::Superfactorial: return q_superfactorial(a);
        case FactorialKind::DoubleSuperfactorial: return q_double_superfactorial(a);
        case FactorialKind::SuperDoublefactorial: return q_super_doublefactorial(a);
        case FactorialKind::ShiftedSuperDoublefactorial:
            return q_shifted_super_doublefactorial(a, b);
        default:
            throw std::domain_error("q_special_factorial: kind has no q-analogue");
    }
}

// Truncated power series in q with exact integer coefficients c_0..c_D.
class QSeries {
public:
    explicit QSeries(long order) : c_(order + 1, Int(0)) {
        if (order < 0) throw std::domain_error("QSeries: negative order");
    }

    long order() const { return static_cast<long>(c_.size()) - 1; }
    const Int& operator[](long k) const { return c_.at(k); }
    Int& operator[](long k) { return c_.at(k); }

    static QSeries from_poly(const QPolynomial& p, long D) {
        QSeries s(D);
        if (!p.is_zero() && p.min_exp() < 0)
            throw std::domain_error("QSeries::from_poly: negative exponent");
        for (const auto& [e, c] : p.terms())
            if (e <= D) s.c_[e] = c;
        return s;
    }

    QPolynomial to_poly() const {
        QPolynomial p;
        for (long k = 0; k <= order(); ++k)
            if (c_[k] != 0) p += QPolynomial::monomial(c_[k], k);
        return p;
    }

    QSeries& operator+=(const QSeries& o) {
        check_order(o);
        for (long k = 0; k <= order(); ++k) c_[k] += o.c_[k];
        return *this;
    }
    friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }

    friend QSeries operator*(const QSeries& a, const QSeries& b) {
        a.check_order(b);
        QSeries r(a.order());
        for (long i = 0; i <= a.order(); ++i) {
            if (a.c_[i] == 0) continue;
            for (long j = 0; i + j <= a.order(); ++j)
                if (b.c_[j] != 0) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        return r;
    }

    bool operator==(const QSeries& o) const { return c_ == o.c_; }

    // num/den expanded through q^D. Requires lowest(num) >= lowest(den) and a
    // +-1 coefficient at den's lowest power.
    static QSeries ratio(const QPolynomial& num, const QPolynomial& den, long D) {
        if (den.is_zero()) throw std::domain_error("series ratio: zero denominator");
        QSeries out(D);
        if (num.is_zero()) return out;
        long a = num.min_exp(), b = den.min_exp();
        if (a < b)
            throw std::domain_error("series ratio: numerator lowest power below denominator's");
        long shift = a - b;
        Int c0 = den.coeff(b);
        if (c0 != 1 && c0 != -1)
            throw std::domain_error("series ratio: non-unit lowest coefficient " + c0.get_str());
        if (shift > D) return out;
        long W = D - shift;
        std::vector<Int> n(W + 1, Int(0)), d(W + 1, Int(0)), r(W + 1, Int(0));
        for (const auto& [e, c] : num.terms())
            if (e - a <= W) n[e - a] = c;
        for (const auto& [e, c] : den.terms())
            if (e - b <= W) d[e - b] = c;
        for (long k = 0; k <= W; ++k) {
            Int acc = n[k];
            for (long t = 1; t <= k; ++t) acc -= d[t] * r[k - t];
            r[k] = (c0 == 1) ? acc : -acc;
        }
        for (long k = 0; k <= W; ++k) out.c_[k + shift] = r[k];
        return out;
    }

private:
    void check_order(const QSeries& o) const {
        if (o.order() != order())
            throw std::invalid_argument("QSeries: mismatched truncation orders");
    }

    std::vector<Int> c_;
};

}  // namespace skewhook
