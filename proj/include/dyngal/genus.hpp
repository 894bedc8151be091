#ifndef DYNGAL_GENUS_HPP
#define DYNGAL_GENUS_HPP

#include <memory>
#include <string>
#include <vector>

#include "dyngal/catalog.hpp"
#include "dyngal/coset.hpp"
#include "dyngal/dynatomic.hpp"
#include "dyngal/wreath.hpp"

namespace dyngal {

// e_n = (1/2n) sum_{d | (n,2)} phi(d)^2 sum_{k in U_{n,d}} mu(n/k) 2^{k/d}
// with U_{n,d} = {k : k | n, d | k, (n/k, d) = 1}.
long compute_e_n(int n);

// H0: setwise stabilizer of the first block {1..n} in W.
GeneratedGroup f0_stabilizer(const WreathParams& params);

// Shared machinery for the S(p) computations: W, H0 and the action of W on
// the r cosets of H0.
struct F0Context {
    WreathParams params;
    GeneratedGroup W;
    GeneratedGroup H0;
    CosetAction action;

    explicit F0Context(const WreathParams& p);
};

// Sum over cycles of (length - 1) of gamma acting on the H0 coset space.
int s_of_p(const F0Context& ctx, const WreathElement& gamma);
int s_of_p(const WreathElement& gamma, const WreathParams& params);

struct InertiaEntry {
    PlaceClass place;
    WreathElement generator;
};

// One cyclic inertia generator per ramified place class; classes with zero
// multiplicity are omitted. The candidate matching S(p) data always runs,
// also when only one candidate exists.
struct InertiaSystem {
    int n = 1;
    std::vector<InertiaEntry> entries;
};

InertiaSystem inertia_system(int n);

struct GenusContribution {
    PlaceClass place;
    long excess = 0;       // sum of (e-1) over the induced coset cycles
    long contribution = 0; // multiplicity * excess
};

struct GenusReport {
    std::string subgroup_id;
    BigInt index;
    std::vector<GenusContribution> contributions;
    long genus = 0;
};

GenusReport genus_of(const SubgroupSpec& spec, const InertiaSystem& system,
                     long coset_limit = 10000);
std::vector<GenusReport> genus_survey(const Catalog& catalog, const InertiaSystem& system,
                                      long coset_limit = 10000);

} // namespace dyngal

#endif
