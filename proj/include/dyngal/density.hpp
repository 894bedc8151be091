#ifndef DYNGAL_DENSITY_HPP
#define DYNGAL_DENSITY_HPP

#include <string>

#include "dyngal/bsgs.hpp"
#include "dyngal/numeric.hpp"

namespace dyngal {

// Number of permutations of r points with exactly i fixed points.
BigInt derangement_like(int r, int i);

// #M = sum_i (n-1)^i n^(r-i) d(r,i): elements of the degree-n wreath group
// without fixed points.
BigInt fixed_point_free_count(int n, int r);

struct DensityResult {
    int n = 0;
    BigInt count;      // #M
    BigInt group_order;
    Rational density;  // count / order
    std::string decimal; // display only, 4 places
};

// Density of primes without a degree-n periodic point in Q_p, for c outside
// the exceptional set.
DensityResult density_T(int n);

// Fraction of elements with at least one fixed point, by enumeration.
Rational density_from_group(const GeneratedGroup& G, const BigInt& budget);

} // namespace dyngal

#endif
