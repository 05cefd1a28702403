#pragma once

#include <cstdint>
#include <vector>

#include "bigint.hpp"
#include "intpoly.hpp"

namespace rmc {

bool is_prime(std::uint64_t n);

// Writes n = p^e with p prime; returns false when n is not a prime power >= 2.
bool factor_prime_power(std::uint64_t n, std::uint64_t& p, unsigned& e);

// Gaussian binomial [a b]_q, the number of b-dimensional subspaces of F_q^a.
// Exact for any integer q >= 2; 0 when b > a. Computed as an iterated
// product-quotient whose prefixes are themselves Gaussian binomials, so every
// intermediate division is checked exact.
BigInt gaussian_binomial(unsigned a, unsigned b, const BigInt& q);

// [a b]_q as a polynomial in q, via the q-Pascal recurrence.
IntPolynomial gaussian_binomial_poly(unsigned a, unsigned b);

// n-th cyclotomic polynomial over Z, by exact division of x^n - 1 by the
// product of the lower-order factors. Memoized.
IntPolynomial cyclotomic(unsigned n);

// J_{a,b} = { j in [1,a] : ((a-b) mod j) + (b mod j) >= j }, the index set of
// the cyclotomic factorization of [a b]_q. Requires 0 < b < a.
struct JSet {
    unsigned a = 0, b = 0;
    std::vector<unsigned> members;  // sorted ascending
    bool contains(unsigned j) const;
};
JSet j_set(unsigned a, unsigned b);

// Certificate for [a b]_q = prod_{j in J_{a,b}} Phi_j(q).
struct FactorizationCertificate {
    unsigned a = 0, b = 0;
    BigInt q;
    JSet jset;
    std::vector<BigInt> factors;  // Phi_j(q), aligned with jset.members
    BigInt product;
    BigInt gaussian;  // independent product-quotient evaluation
    bool ok = false;  // product == gaussian
};
FactorizationCertificate verify_factorization(unsigned a, unsigned b, const BigInt& q);

// Certificate that c is not a member of J_{d+p,p-1} when p is a prime dividing
// both d+1 and c. Requires exactly those hypotheses.
struct JabCertificate {
    unsigned d = 0, p = 0, c = 0;
    std::uint64_t residue_a_minus_b = 0;  // (d+1) mod c
    std::uint64_t residue_b = 0;          // (p-1) mod c
    bool member = false;                  // c in J_{d+p,p-1}
    bool ok = false;                      // !member, which the lemma asserts
};
JabCertificate lemma_jab_check(unsigned d, unsigned p, unsigned c);

// Certificate that gcd(Phi_p(q), Phi_c(q)) > 1 implies p | c.
struct GcdCertificate {
    unsigned p = 0, c = 0;
    BigInt q;
    BigInt phi_p, phi_c, gcd;
    bool gcd_trivial = false;  // gcd == 1
    bool p_divides_c = false;
    bool ok = false;  // gcd_trivial || p_divides_c
};
GcdCertificate cyclotomic_gcd_check(unsigned p, unsigned c, const BigInt& q);

}  // namespace rmc
