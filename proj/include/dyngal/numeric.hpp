#ifndef DYNGAL_NUMERIC_HPP
#define DYNGAL_NUMERIC_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace dyngal {

// Exact arithmetic is delegated to GMP. BigInt is canonical sign+magnitude,
// Rational is kept reduced with positive denominator by construction.
using BigInt = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const BigInt& num, const BigInt& den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

BigInt factorial(unsigned long n);
BigInt binomial(unsigned long n, unsigned long k);
BigInt pow_bigint(const BigInt& base, unsigned long e);

// Moebius function via trial-division factorization.
int mobius(std::uint64_t m);

// Euler totient via trial-division factorization.
std::uint64_t euler_phi(std::uint64_t m);

bool is_prime_u64(std::uint64_t n);

// Deterministic ascending prime stream: 2, 3, 5, ...
class PrimeStream {
public:
    explicit PrimeStream(std::uint64_t start_after = 1) : last_(start_after) {}
    std::uint64_t next();

private:
    std::uint64_t last_;
};

// floor(num/den) for exact rationals, as an integer.
BigInt floor_div(const Rational& q);
BigInt ceil_div(const Rational& q);

// Decimal expansion of q in [0,1]-ish range rounded half away from zero
// to `digits` fractional digits, e.g. "0.8465".
std::string decimal_round(const Rational& q, int digits);

} // namespace dyngal

#endif
