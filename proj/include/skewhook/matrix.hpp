#pragma once

#include "skewhook/qpoly.hpp"
#include "skewhook/rational.hpp"

#include <vector>

namespace skewhook {

class RationalMatrix {
public:
    RationalMatrix(size_t rows, size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols, Rat(0)) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Rat& at(size_t i, size_t j) { return e_.at(i * cols_ + j); }
    const Rat& at(size_t i, size_t j) const { return e_.at(i * cols_ + j); }

private:
    size_t rows_, cols_;
    std::vector<Rat> e_;
};

// Fraction-free (Bareiss) determinant over the integers after clearing row
// denominators. 0x0 determinant is 1.
inline Rat det_exact(const RationalMatrix& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("det_exact: matrix is not square");
    size_t n = m.rows();
    if (n == 0) return Rat(1);

    std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
    Int denom = 1;
    for (size_t i = 0; i < n; ++i) {
        Int g = 1;
        for (size_t j = 0; j < n; ++j)
            mpz_lcm(g.get_mpz_t(), g.get_mpz_t(), m.at(i, j).get_den().get_mpz_t());
        for (size_t j = 0; j < n; ++j) {
            Rat v = m.at(i, j) * Rat(g);
            a[i][j] = v.get_num();
        }
        denom *= g;
    }

    int sign = 1;
    Int prev = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return Rat(0);
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                Int t = a[k][k] * a[i][j] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    Rat det(a[n - 1][n - 1] * sign, denom);
    det.canonicalize();
    return det;
}

// Bareiss over polynomials in q; every division is exact in Z[q,q^-1].
inline QPolynomial det_poly(std::vector<std::vector<QPolynomial>> a) {
    size_t n = a.size();
    for (const auto& row : a)
        if (row.size() != n) throw std::invalid_argument("det_poly: matrix is not square");
    if (n == 0) return QPolynomial(1);

    int sign = 1;
    QPolynomial prev(1);
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            size_t p = k + 1;
            while (p < n && a[p][k].is_zero()) ++p;
            if (p == n) return QPolynomial();
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]).divide_exact(prev);
            a[i][k] = QPolynomial();
        }
        prev = a[k][k];
    }
    return sign == 1 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

}  // namespace skewhook
