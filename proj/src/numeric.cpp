#include "dyngal/numeric.hpp"

#include <stdexcept>

namespace dyngal {

BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

BigInt pow_bigint(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

int mobius(std::uint64_t m) {
    if (m == 0) throw std::invalid_argument("mobius: m must be positive");
    int sign = 1;
    for (std::uint64_t p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            m /= p;
            if (m % p == 0) return 0;
            sign = -sign;
        }
    }
    if (m > 1) sign = -sign;
    return sign;
}

std::uint64_t euler_phi(std::uint64_t m) {
    if (m == 0) throw std::invalid_argument("euler_phi: m must be positive");
    std::uint64_t result = m;
    for (std::uint64_t p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

std::uint64_t PrimeStream::next() {
    std::uint64_t n = last_ + 1;
    while (!is_prime_u64(n)) ++n;
    last_ = n;
    return n;
}

BigInt floor_div(const Rational& q) {
    BigInt r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

BigInt ceil_div(const Rational& q) {
    BigInt r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

std::string decimal_round(const Rational& q, int digits) {
    bool neg = q < 0;
    Rational a = neg ? Rational(-q) : q;
    BigInt scale = pow_bigint(BigInt(10), static_cast<unsigned long>(digits));
    // round half away from zero: floor(a*scale + 1/2)
    Rational scaled = a * Rational(scale) + Rational(1, 2);
    BigInt units = floor_div(scaled);
    BigInt ip = units / scale;
    BigInt fp = units % scale;
    std::string frac = fp.get_str();
    while (static_cast<int>(frac.size()) < digits) frac.insert(frac.begin(), '0');
    std::string out = ip.get_str() + "." + frac;
    if (neg) out.insert(out.begin(), '-');
    return out;
}

} // namespace dyngal
