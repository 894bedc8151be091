#ifndef DYNGAL_CATALOG_HPP
#define DYNGAL_CATALOG_HPP

#include <optional>
#include <string>
#include <vector>

#include "dyngal/bsgs.hpp"
#include "dyngal/numeric.hpp"
#include "dyngal/wreath.hpp"

namespace dyngal {

enum class SubgroupFamily { PullbackSr, SumKernel, DiagonalResidue, External };

// Generator-list description of a subgroup of W, with enough metadata to
// validate it against its expected index.
struct SubgroupSpec {
    std::string id;
    int n = 1;
    SubgroupFamily family = SubgroupFamily::External;
    int q = 0;                // SumKernel / DiagonalResidue modulus
    bool sign_twisted = false;
    std::vector<WreathElement> generators;
    std::optional<BigInt> expected_index;
    std::string provenance;
};

struct Catalog {
    int n = 0;
    std::string status; // paper-verified | reconstructed | external
    std::vector<SubgroupSpec> specs;
};

GeneratedGroup group_of(const SubgroupSpec& spec, const WreathParams& params);

// Full preimage of M <= S_r under W -> S_r: all rotations plus zero-twist
// lifts of the M generators.
SubgroupSpec build_pullback(int n, int r, const std::string& id,
                            const std::vector<Permutation>& m_gens);

// {(f,pi) : sum f = 0 mod q}, or the sign-twisted variant
// {(f,pi) : sum f + sgn(pi) = 0 mod 2} (requires q = 2).
SubgroupSpec build_sum_kernel(int n, int r, int q, bool sign_twisted);

// {(f,pi) : f mod q constant}; requires q | n prime with gcd(q, r) = 1.
SubgroupSpec build_diagonal_residue(int n, int r, int q);

// The reconstructed maximal-subgroup catalogs shipped with the artifact.
// Supported n: 1, 5, 6, 7.
Catalog bundled_catalog(int n);

Catalog load_catalog(const std::string& path);
void save_catalog(const Catalog& catalog, const std::string& path);
Catalog parse_catalog(const std::string& text);
std::string render_catalog(const Catalog& catalog);

struct ValidationEntry {
    std::string spec_id;
    std::string check;
    bool passed = false;
    std::string detail;
};

// (i) generators commute with sigma, (ii) BSGS index equals the expected
// index when present, (iii) subgroup is proper and nontrivial.
std::vector<ValidationEntry> validate(const SubgroupSpec& spec, const WreathParams& params);
std::vector<ValidationEntry> validate(const Catalog& catalog);

// Generators for the subgroups of S_r used by the bundled catalogs.
std::vector<Permutation> symmetric_product_gens(int r, int k);      // S_k x S_{r-k}
std::vector<Permutation> imprimitive_wreath_gens(int r, int a);     // S_a wr S_{r/a}
std::vector<Permutation> alternating_gens(int r);                   // A_r
std::vector<Permutation> pgl2_gens(int q);                          // PGL(2,q) on q+1 points
std::vector<Permutation> agl23_gens();                              // AGL(2,3) on 9 points

} // namespace dyngal

#endif
