#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace rmc {

// Exact arbitrary-precision integer. Gaussian binomials such as [100 49]_3
// overflow any fixed-width type by a wide margin.
using BigInt = mpz_class;

inline BigInt big_pow(const BigInt& base, unsigned long exp) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

inline BigInt big_gcd(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline bool divides(const BigInt& d, const BigInt& n) {
    return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

// Exact quotient; the caller must know d | n.
inline BigInt exact_div(const BigInt& n, const BigInt& d) {
    BigInt r;
    mpz_divexact(r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    return r;
}

inline std::string to_string(const BigInt& x) { return x.get_str(); }

}  // namespace rmc
