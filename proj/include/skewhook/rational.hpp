#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace skewhook {

using Int = mpz_class;
using Rat = mpq_class;

// resource_error: an enumeration or expansion exceeded its configured bound.
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Int factorial(long n) {
    if (n < 0) throw std::domain_error("factorial: negative argument");
    Int r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

// n!! with (-1)!! = 0!! = 1.
inline Int double_factorial(long n) {
    if (n < -1) throw std::domain_error("double_factorial: argument below -1");
    if (n <= 0) return 1;
    Int r;
    mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

inline Int binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

// (k)_m = k(k-1)...(k-m+1)
inline Int falling_factorial(const Int& k, long m) {
    if (m < 0) throw std::domain_error("falling_factorial: negative length");
    Int r = 1;
    for (long t = 0; t < m; ++t) r *= k - t;
    return r;
}

inline Int pow_int(const Int& b, long e) {
    if (e < 0) throw std::domain_error("pow_int: negative exponent");
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

inline Rat pow_rat(const Rat& b, long e) {
    if (e == 0) return Rat(1);
    if (e < 0) {
        if (b == 0) throw std::domain_error("pow_rat: zero to negative power");
        Rat inv = Rat(1) / b;
        return pow_rat(inv, -e);
    }
    Rat r = 1;
    for (long t = 0; t < e; ++t) r *= b;
    return r;
}

// Exact quotient that must be an integer; used after product formulas.
inline Int rat_to_int(const Rat& r, const char* what) {
    Rat c = r;
    c.canonicalize();
    if (c.get_den() != 1)
        throw std::domain_error(std::string(what) + ": non-integer value " + c.get_str());
    return c.get_num();
}

inline std::string int_str(const Int& v) { return v.get_str(); }
inline std::string rat_str(const Rat& v) { return v.get_str(); }

inline Rat parse_rat(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("parse_rat: bad rational '" + s + "'");
    r.canonicalize();
    return r;
}

}  // namespace skewhook
