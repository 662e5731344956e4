#pragma once

#include "skewhook/rational.hpp"

namespace skewhook {

enum class FactorialKind {
    Factorial,
    DoubleFactorial,
    FallingFactorial,
    Superfactorial,
    DoubleSuperfactorial,
    SuperDoublefactorial,
    ShiftedSuperDoublefactorial,
    FallingSuperfactorial,
};

// Phi(n) = 1! 2! ... (n-1)!
inline Int superfactorial(long n) {
    if (n < 0) throw std::domain_error("superfactorial: negative argument");
    Int r = 1;
    for (long i = 2; i < n; ++i) r *= factorial(i);
    return r;
}

// gimel(n) = (n-2)!(n-4)!... ending at 1! or 0!; 1 for n <= 1.
inline Int double_superfactorial(long n) {
    if (n < 0) throw std::domain_error("double_superfactorial: negative argument");
    Int r = 1;
    for (long i = n - 2; i >= 2; i -= 2) r *= factorial(i);
    return r;
}

// Psi(n) = 1!! 3!! ... (2n-3)!!
inline Int super_doublefactorial(long n) {
    if (n < 0) throw std::domain_error("super_doublefactorial: negative argument");
    Int r = 1;
    for (long i = 1; i <= n - 1; ++i) r *= double_factorial(2 * i - 1);
    return r;
}

// Psi(n;k) = (k+1)!!(k+3)!!...(k+2n-3)!!; 1 for n <= 1.
inline Int shifted_super_doublefactorial(long n, long k) {
    if (n < 0 || k < 0)
        throw std::domain_error("shifted_super_doublefactorial: negative argument");
    Int r = 1;
    for (long i = 1; i <= n - 1; ++i) r *= double_factorial(k + 2 * i - 1);
    return r;
}

// Psi^(m)(n) = prod_{i=1}^{n-1} prod_{j=1}^{i} (jm+j-1)_m
inline Int falling_superfactorial(long n, long m) {
    if (n < 0 || m < 0)
        throw std::domain_error("falling_superfactorial: negative argument");
    Int r = 1;
    for (long i = 1; i <= n - 1; ++i)
        for (long j = 1; j <= i; ++j)
            r *= falling_factorial(Int(j * m + j - 1), m);
    return r;
}

// args: (n) for the single-argument kinds, (k,m) for FallingFactorial,
// (n,k) for ShiftedSuperDoublefactorial, (n,m) for FallingSuperfactorial.
inline Int special_factorial(FactorialKind kind, long a, long b = 0) {
    switch (kind) {
        case FactorialKind::Factorial: return factorial(a);
        case FactorialKind::DoubleFactorial:
            if (a < 0) throw std::domain_error("double_factorial: negative argument");
            return double_factorial(a);
        case FactorialKind::FallingFactorial:
            if (a < 0) throw std::domain_error("falling_factorial: negative argument");
            return falling_factorial(Int(a), b);
        case FactorialKind::Superfactorial: return superfactorial(a);
        case FactorialKind::DoubleSuperfactorial: return double_superfactorial(a);
        case FactorialKind::SuperDoublefactorial: return super_doublefactorial(a);
        case FactorialKind::ShiftedSuperDoublefactorial:
            return shifted_super_doublefactorial(a, b);
        case FactorialKind::FallingSuperfactorial: return falling_superfactorial(a, b);
    }
    throw std::domain_error("special_factorial: unknown kind");
}

}  // namespace skewhook
