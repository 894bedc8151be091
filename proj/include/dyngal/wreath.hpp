#ifndef DYNGAL_WREATH_HPP
#define DYNGAL_WREATH_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dyngal/bsgs.hpp"
#include "dyngal/numeric.hpp"
#include "dyngal/perm.hpp"

namespace dyngal {

// W = (Z/nZ) wr S_r acting on D = n*r points. Point n*(i-1)+1+a (1-based)
// corresponds to the pair (a, i) with residue a in [0,n) and block index
// i in [1,r]; block i occupies a consecutive run of n points.
struct WreathParams {
    int n = 1;
    int r = 1;
    int D = 1;

    WreathParams(int n_, int r_) : n(n_), r(r_), D(n_ * r_) {}
};

// Element (f, pi): f is the residue vector, pi permutes the r blocks.
// (f,pi) sends (a,i) to (f(pi(i)) + a, pi(i)).
struct WreathElement {
    std::vector<int> f;  // length r, values in [0,n)
    Permutation pi;      // degree r

    bool operator==(const WreathElement& o) const { return f == o.f && pi == o.pi; }
    bool operator<(const WreathElement& o) const {
        if (f != o.f) return f < o.f;
        return pi < o.pi;
    }
};

// Conjugacy invariant: t[(a,k)] counts k-cycles of pi whose f-sum along the
// cycle is a. Only nonzero counts are stored.
using WreathType = std::map<std::pair<int, int>, int>;

WreathElement wreath_identity(const WreathParams& params);
WreathElement wreath_mul(const WreathElement& a, const WreathElement& b,
                         const WreathParams& params);
WreathElement wreath_inv(const WreathElement& a, const WreathParams& params);
WreathElement wreath_pow(const WreathElement& a, long e, const WreathParams& params);

// sigma = (1..n)(n+1..2n)... : the product of the r block n-cycles.
Permutation sigma(const WreathParams& params);

Permutation to_perm(const WreathElement& w, const WreathParams& params);
// Requires g to commute with sigma; NotInWreathGroup otherwise.
WreathElement from_perm(const Permutation& g, const WreathParams& params);

// Standard elements; block indices are 1-based as in the group notation.
WreathElement rho(int i, const WreathParams& params);
WreathElement tau(int i, int j, const WreathParams& params);
// (rho_1...rho_{r-2j})^{n/2} * tau_{r-1-2i, r-2i} products; requires n even.
WreathElement gamma_j(int j, const WreathParams& params);

WreathType type_of(const WreathElement& w, const WreathParams& params);
bool is_conjugate(const WreathElement& a, const WreathElement& b, const WreathParams& params);
BigInt centralizer_order(const WreathType& t, const WreathParams& params);

enum class WreathCase { Case1a, Case1b, Case2a, Case2b, Case3, Other };

struct Classification {
    WreathCase tag = WreathCase::Other;
    int ell = 0;      // Case1b: number of pi-fixed blocks
    int i = 0, j = 0; // Case2a/2b: 1-based block indices; Case3 uses i
    int s = 0;        // Case2b/Case3 rotation exponent
};

Classification classify(const WreathElement& w, const WreathParams& params);

// Cycle pattern of to_perm(w) computed from the type alone: each unit of
// t[(a,k)] yields gcd(n,a) cycles of length k*n/gcd(n,a).
CyclePattern induced_cycle_pattern(const WreathType& t, const WreathParams& params);

// Generators of W as a permutation group on D points.
std::vector<Permutation> wreath_group_generators(const WreathParams& params);
GeneratedGroup wreath_group(const WreathParams& params);

// Literal syntax `[f1,...,fr];(cycles on r points)`.
std::string to_literal(const WreathElement& w);
WreathElement parse_wreath_element(const std::string& text, const WreathParams& params);

} // namespace dyngal

#endif
