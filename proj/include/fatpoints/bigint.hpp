#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fatpoints {

using Int = mpz_class;
using Rat = mpq_class;

/// Binomial coefficient with the vanishing convention:
/// binom(a, b) = 0 whenever b < 0 or a < b.
inline Int binom(long a, long b) {
    if (b < 0 || a < b) return Int(0);
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a),
                 static_cast<unsigned long>(b));
    return r;
}

inline Int factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    Int r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

/// base^e for big-integer base, e >= 0. pow(0, 0) = 1.
inline Int pow_int(const Int& base, long e) {
    if (e < 0) throw std::invalid_argument("pow_int: negative exponent");
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

inline Int pow_int(long base, long e) { return pow_int(Int(base), e); }

/// Floor division for machine integers with sign-correct rounding.
inline long floor_div(long num, long den) {
    if (den == 0) throw std::invalid_argument("floor_div: zero denominator");
    long q = num / den, r = num % den;
    if (r != 0 && ((r < 0) != (den < 0))) --q;
    return q;
}

inline long ceil_div(long num, long den) { return -floor_div(-num, den); }

inline std::string to_string(const Int& v) { return v.get_str(); }
inline std::string to_string(const Rat& v) { return v.get_str(); }

}  // namespace fatpoints
