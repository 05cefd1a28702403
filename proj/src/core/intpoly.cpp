#include "intpoly.hpp"

#include <algorithm>
#include <sstream>

#include "errors.hpp"

namespace rmc {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { normalize(); }

IntPolynomial IntPolynomial::constant(const BigInt& c) { return IntPolynomial({c}); }

IntPolynomial IntPolynomial::monomial(const BigInt& c, std::size_t n) {
    std::vector<BigInt> v(n + 1, BigInt(0));
    v[n] = c;
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::xn_minus_one(std::size_t n) {
    std::vector<BigInt> v(n + 1, BigInt(0));
    v[0] = -1;
    v[n] = 1;
    return IntPolynomial(std::move(v));
}

void IntPolynomial::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const BigInt& IntPolynomial::coeff(std::size_t i) const {
    static const BigInt zero(0);
    return i < c_.size() ? c_[i] : zero;
}

BigInt IntPolynomial::eval(const BigInt& x) const {
    BigInt r(0);
    for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    std::vector<BigInt> v(std::max(c_.size(), o.c_.size()), BigInt(0));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) + o.coeff(i);
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
    std::vector<BigInt> v(std::max(c_.size(), o.c_.size()), BigInt(0));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) - o.coeff(i);
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    if (is_zero() || o.is_zero()) return IntPolynomial();
    std::vector<BigInt> v(c_.size() + o.c_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::exact_divide(const IntPolynomial& o) const {
    if (o.is_zero()) fail(Errc::invalid_argument, "polynomial division by zero");
    if (is_zero()) return IntPolynomial();
    if (degree() < o.degree())
        fail(Errc::non_integral_count, "polynomial division is not exact: degree too small");
    std::vector<BigInt> rem = c_;
    std::vector<BigInt> quot(c_.size() - o.c_.size() + 1, BigInt(0));
    const BigInt& lead = o.c_.back();
    for (std::size_t i = quot.size(); i-- > 0;) {
        BigInt top = rem[i + o.c_.size() - 1];
        if (top == 0) continue;
        if (!divides(lead, top))
            fail(Errc::non_integral_count, "polynomial division is not exact over Z[x]");
        BigInt q = exact_div(top, lead);
        quot[i] = q;
        for (std::size_t j = 0; j < o.c_.size(); ++j) rem[i + j] -= q * o.c_[j];
    }
    for (const BigInt& r : rem)
        if (r != 0) fail(Errc::non_integral_count, "polynomial division leaves a remainder");
    return IntPolynomial(std::move(quot));
}

std::string IntPolynomial::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const BigInt& c = c_[i];
        if (c == 0) continue;
        BigInt a = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (i == 0 || a != 1) os << a.get_str();
        if (i >= 1) {
            os << "x";
            if (i >= 2) os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace rmc
