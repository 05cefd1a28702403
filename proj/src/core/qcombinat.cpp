#include "qcombinat.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "errors.hpp"

namespace rmc {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    // deterministic Miller-Rabin for 64-bit inputs
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (unsigned i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

bool factor_prime_power(std::uint64_t n, std::uint64_t& p, unsigned& e) {
    if (n < 2) return false;
    for (unsigned k = 63; k >= 1; --k) {
        // candidate root r with r^k == n
        std::uint64_t r = static_cast<std::uint64_t>(std::llround(std::pow(static_cast<double>(n), 1.0 / k)));
        for (std::uint64_t cand = (r > 2 ? r - 2 : 1); cand <= r + 2; ++cand) {
            if (cand < 2) continue;
            unsigned __int128 v = 1;
            for (unsigned i = 0; i < k && v <= n; ++i) v *= cand;
            if (v == n) {
                if (!is_prime(cand)) return false;
                p = cand;
                e = k;
                return true;
            }
        }
    }
    return false;
}

BigInt gaussian_binomial(unsigned a, unsigned b, const BigInt& q) {
    if (q < 2) fail(Errc::invalid_argument, "gaussian_binomial requires q >= 2");
    if (b > a) return BigInt(0);
    if (b > a - b) b = a - b;  // symmetry keeps intermediates small
    BigInt r(1);
    for (unsigned i = 0; i < b; ++i) {
        BigInt num = big_pow(q, a - i) - 1;
        BigInt den = big_pow(q, i + 1) - 1;
        r *= num;
        // the prefix product is [a i+1]_q, an integer
        if (!divides(den, r)) fail(Errc::internal, "gaussian_binomial prefix not divisible");
        r = exact_div(r, den);
    }
    return r;
}

IntPolynomial gaussian_binomial_poly(unsigned a, unsigned b) {
    if (b > a) return IntPolynomial();
    if (b > a - b) b = a - b;
    // [a b] = [a-1 b-1] + q^b [a-1 b], with [x 0] = 1
    std::vector<IntPolynomial> row(b + 1);
    row[0] = IntPolynomial::constant(1);
    for (unsigned n = 1; n <= a; ++n) {
        unsigned top = std::min(b, n);
        for (unsigned k = top; k >= 1; --k) {
            IntPolynomial up = (k <= n - 1) ? row[k] : IntPolynomial();
            row[k] = row[k - 1] + IntPolynomial::monomial(1, k) * up;
            if (k == 1) break;
        }
    }
    return row[b];
}

IntPolynomial cyclotomic(unsigned n) {
    if (n == 0) fail(Errc::invalid_argument, "cyclotomic polynomial index must be >= 1");
    static std::mutex mu;
    static std::map<unsigned, IntPolynomial> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    IntPolynomial result;
    if (n == 1) {
        result = IntPolynomial({BigInt(-1), BigInt(1)});
    } else {
        IntPolynomial divisor = IntPolynomial::constant(1);
        for (unsigned d = 1; d < n; ++d)
            if (n % d == 0) divisor = divisor * cyclotomic(d);
        result = IntPolynomial::xn_minus_one(n).exact_divide(divisor);
    }
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(n, result);
    return result;
}

bool JSet::contains(unsigned j) const {
    return std::binary_search(members.begin(), members.end(), j);
}

JSet j_set(unsigned a, unsigned b) {
    if (!(0 < b && b < a)) fail(Errc::b_out_of_range, "j_set requires 0 < b < a");
    JSet s;
    s.a = a;
    s.b = b;
    for (unsigned j = 1; j <= a; ++j)
        if ((a - b) % j + b % j >= j) s.members.push_back(j);
    return s;
}

FactorizationCertificate verify_factorization(unsigned a, unsigned b, const BigInt& q) {
    FactorizationCertificate cert;
    cert.a = a;
    cert.b = b;
    cert.q = q;
    cert.jset = j_set(a, b);
    cert.product = 1;
    for (unsigned j : cert.jset.members) {
        BigInt phi = cyclotomic(j).eval(q);
        cert.factors.push_back(phi);
        cert.product *= phi;
    }
    cert.gaussian = gaussian_binomial(a, b, q);
    cert.ok = (cert.product == cert.gaussian);
    return cert;
}

JabCertificate lemma_jab_check(unsigned d, unsigned p, unsigned c) {
    if (!is_prime(p)) fail(Errc::hypothesis_violated, "lemma_jab_check: p must be prime");
    if ((d + 1) % p != 0) fail(Errc::hypothesis_violated, "lemma_jab_check: p must divide d+1");
    if (c % p != 0) fail(Errc::hypothesis_violated, "lemma_jab_check: p must divide c");
    if (c == 0) fail(Errc::hypothesis_violated, "lemma_jab_check: c must be positive");
    JabCertificate cert;
    cert.d = d;
    cert.p = p;
    cert.c = c;
    cert.residue_a_minus_b = (d + 1u) % c;
    cert.residue_b = (p - 1u) % c;
    // membership in J_{d+p,p-1}; c > d+p can never be a member
    cert.member = (c <= d + p) && (cert.residue_a_minus_b + cert.residue_b >= c);
    cert.ok = !cert.member;
    return cert;
}

GcdCertificate cyclotomic_gcd_check(unsigned p, unsigned c, const BigInt& q) {
    if (!is_prime(p)) fail(Errc::hypothesis_violated, "cyclotomic_gcd_check: p must be prime");
    if (c < 1) fail(Errc::hypothesis_violated, "cyclotomic_gcd_check: c must be >= 1");
    GcdCertificate cert;
    cert.p = p;
    cert.c = c;
    cert.q = q;
    cert.phi_p = cyclotomic(p).eval(q);
    cert.phi_c = cyclotomic(c).eval(q);
    cert.gcd = big_gcd(cert.phi_p, cert.phi_c);
    cert.gcd_trivial = (cert.gcd == 1);
    cert.p_divides_c = (c % p == 0);
    cert.ok = cert.gcd_trivial || cert.p_divides_c;
    return cert;
}

}  // namespace rmc
