#ifndef DYNGAL_SIEVE_HPP
#define DYNGAL_SIEVE_HPP

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dyngal/catalog.hpp"
#include "dyngal/dynatomic.hpp"
#include "dyngal/numeric.hpp"

namespace dyngal {

// All rationals of height <= h, ordered by (height, numerator, denominator).
std::vector<Rational> enumerate_heights(long h);

struct PatternSet {
    std::string subgroup_id;
    std::set<CyclePattern> patterns;
    std::string provenance; // enumerated | external
    BigInt budget_used;
};

// Exact set of cycle patterns realized by the subgroup's elements, via full
// enumeration; cached to disk keyed by (n, id, generator hash) when a cache
// directory is given.
PatternSet pattern_set(const SubgroupSpec& spec, const WreathParams& params, const BigInt& budget,
                       const std::string& cache_dir = "");

// Enumerates wreath types consistent with an observed cycle pattern until
// the predicate accepts one.
bool exists_consistent_type(const CyclePattern& pattern, const WreathParams& params,
                            const std::function<bool(const WreathType&)>& pred);

enum class VerdictTag { CertifiedGeneric, CandidateExceptional, DiscriminantZero };

struct ExclusionWitness {
    std::string subgroup_id;
    std::uint64_t prime = 0;
    CyclePattern pattern;
};

struct SieveVerdict {
    Rational c;
    VerdictTag tag = VerdictTag::CandidateExceptional;
    std::vector<ExclusionWitness> witnesses;   // one per excluded subgroup class
    std::vector<std::string> surviving_ids;    // nonempty for CandidateExceptional
    long primes_consumed = 0;
    std::string catalog_status;
};

// Per-catalog machinery shared across certifications. Each subgroup class
// carries either its enumerated pattern set or an exact realizable-type
// predicate derived from its family; classes with neither are recorded as
// non-excludable and always survive.
class SieveContext {
public:
    SieveContext(int n, Catalog catalog, const BigInt& enumeration_budget,
                 const std::string& cache_dir = "", int threads = 1);

    const DynatomicInstance& instance() const { return inst_; }
    const Catalog& catalog() const { return catalog_; }
    const std::vector<std::string>& non_excludable() const { return non_excludable_; }

    // true if some element of the class can have this Frobenius pattern
    bool realizes(size_t spec_idx, const CyclePattern& pattern) const;

    SieveVerdict certify(const Rational& c, long prime_budget) const;

private:
    DynatomicInstance inst_;
    Catalog catalog_;
    std::vector<std::optional<PatternSet>> enumerated_;
    // pullback family: cycle types of the S_r image
    std::vector<std::optional<std::set<CyclePattern>>> pi_types_;
    std::vector<std::string> non_excludable_;
};

struct ScanReport {
    int n = 0;
    long height = 0;
    long prime_budget = 0;
    std::string catalog_status;
    std::vector<SieveVerdict> verdicts;
    std::vector<Rational> candidate_exceptional;
    std::vector<Rational> discriminant_zero;
};

ScanReport scan(long h, const SieveContext& ctx, long prime_budget, int threads = 1);

} // namespace dyngal

#endif
