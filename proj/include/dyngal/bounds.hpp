#ifndef DYNGAL_BOUNDS_HPP
#define DYNGAL_BOUNDS_HPP

#include <string>
#include <vector>

#include "dyngal/catalog.hpp"
#include "dyngal/numeric.hpp"
#include "dyngal/wreath.hpp"

namespace dyngal {

// Theta_n = {rho_i^s : 1 <= i <= r, 0 < s < n}
std::vector<WreathElement> theta_set(const WreathParams& params);
// elements of Theta_n with cycle type (n/d, d), i.e. gcd(n, s) = d
std::vector<WreathElement> theta_subset(const WreathParams& params, int d);
// Lambda_n = {rho_i^{-s} tau_{i,j} rho_i^s : i < j, 0 <= s < n}
std::vector<WreathElement> lambda_set(const WreathParams& params);
// Psi_n = {(rho_i rho_j)^{n/2} : i < j}; even n only
std::vector<WreathElement> psi_set(const WreathParams& params);

// |C_W(gamma)| * s(H,gamma) / |H| where s counts W-conjugates of gamma
// inside H; the conjugacy class is enumerated from gamma's classification
// (rho-power, tau-conjugate or half-turn pair families).
Rational unramified_count(const GeneratedGroup& H, const WreathElement& gamma,
                          const WreathParams& params);

struct DivisorBound {
    int d = 1;
    Rational u;
    BigInt g_prime;
};

// u_{n,d}(H) per the lower-bound machinery; for d = n with n even the
// Lambda term gains the Psi term, gated by `experimental_even`.
Rational u_nd(const GeneratedGroup& H, int d, const WreathParams& params,
              bool experimental_even = false);

// a - floor((u + a)/2): lower bound for the ramification excess over one
// place, given at most u unramified places out of index a.
BigInt excess_lower_bound(const Rational& u, const BigInt& a);

BigInt g_prime(const GeneratedGroup& H, int d, const WreathParams& params,
               bool experimental_even = false);

struct BoundReport {
    std::string subgroup_id;
    BigInt index;
    std::vector<DivisorBound> divisors;
    BigInt lower_bound;
};

// ceil(1 - a + (1/2) sum_d max(g'_{n,d}, 0)); the infinite place is
// deliberately not included.
BoundReport genus_lower_bound(const SubgroupSpec& spec, const WreathParams& params,
                              bool experimental_even = false);
std::vector<BoundReport> bound_survey(const Catalog& catalog, bool experimental_even = false);

} // namespace dyngal

#endif
