#ifndef DYNGAL_DYNATOMIC_HPP
#define DYNGAL_DYNATOMIC_HPP

#include <optional>
#include <vector>

#include "dyngal/bipoly.hpp"
#include "dyngal/numeric.hpp"
#include "dyngal/perm.hpp"
#include "dyngal/wreath.hpp"

namespace dyngal {

// nu(s) = (1/2) sum_{d|s} mu(s/d) 2^d
BigInt nu(int s);

// Wreath parameters of the degree-n instance: D = 2*nu(n), r = D/n.
WreathParams dynatomic_params(int n);

// The n-th dynatomic polynomial of x^2 + t and the group data derived from
// its degree: D = deg_x = 2*nu(n), r = D/n.
struct DynatomicInstance {
    int n;
    BiPoly poly;
    int D;
    int r;
    WreathParams params;
};

// Multiply the factors with positive Moebius exponent and divide exactly by
// the rest; the degree identity D = 2*nu(n) is enforced.
DynatomicInstance build_dynatomic(int n);

// Degree of the bifurcation discriminant for divisor d of n.
long delta_degree(int n, int d);

struct PlaceClass {
    bool at_infinity = false;
    int d = 0;           // meaningful when !at_infinity
    long multiplicity = 0;
};

// Infinity (multiplicity 1) plus one class per divisor d | n with
// multiplicity delta_degree(n, d), divisors listed in descending order.
std::vector<PlaceClass> place_classes(int n);

struct Specialization {
    IntPoly poly;     // denominators cleared
    bool squarefree;  // over Q
};

Specialization specialize(const DynatomicInstance& inst, const Rational& c);

// Multiset of irreducible factor degrees of the specialization mod p, or
// nullopt (BadPrime) when p divides den(c) or the reduction is not
// squarefree.
std::optional<CyclePattern> frobenius_pattern(const DynatomicInstance& inst, const Rational& c,
                                              std::uint64_t p);

} // namespace dyngal

#endif
