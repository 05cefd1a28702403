#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bigint.hpp"

namespace rmc {

// Dense polynomial with exact integer coefficients, stored low degree first.
// The zero polynomial has an empty coefficient vector; otherwise the leading
// coefficient is nonzero.
class IntPolynomial {
  public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs);
    static IntPolynomial constant(const BigInt& c);
    // x^n with coefficient c
    static IntPolynomial monomial(const BigInt& c, std::size_t n);
    // x^n - 1
    static IntPolynomial xn_minus_one(std::size_t n);

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is reported as -1
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<BigInt>& coeffs() const { return c_; }
    const BigInt& coeff(std::size_t i) const;

    BigInt eval(const BigInt& x) const;

    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator-(const IntPolynomial& o) const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    bool operator==(const IntPolynomial& o) const { return c_ == o.c_; }
    bool operator!=(const IntPolynomial& o) const { return c_ != o.c_; }

    // Exact division: throws Errc::non_integral_count if o does not divide
    // *this over Z[x].
    IntPolynomial exact_divide(const IntPolynomial& o) const;

    // Human-readable form, e.g. "x^2 - x + 1".
    std::string str() const;

  private:
    void normalize();
    std::vector<BigInt> c_;
};

}  // namespace rmc
