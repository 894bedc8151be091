#ifndef DYNGAL_COSET_HPP
#define DYNGAL_COSET_HPP

#include <unordered_map>
#include <vector>

#include "dyngal/bsgs.hpp"
#include "dyngal/perm.hpp"

namespace dyngal {

// Transitive action of G on the left cosets of H by left multiplication.
// Coset 0 is H itself; transversal rep t_i satisfies coset i = t_i H.
// Cosets are identified through a canonical representative: the element of
// x*H whose image tuple on H's base is lexicographically minimal. BFS
// discovery order fixes the numbering, so results match the plain
// membership-scan identification while staying O(base length) per image.
class CosetAction {
public:
    // Requires every generator of H to lie in G; index |G:H| must not
    // exceed `index_limit` (IndexLimitExceeded otherwise).
    CosetAction(const GeneratedGroup& G, const GeneratedGroup& H, long index_limit = 100000);

    int coset_count() const { return static_cast<int>(transversal_.size()); }
    const std::vector<Permutation>& generator_images() const { return gen_images_; }
    const std::vector<Permutation>& transversal() const { return transversal_; }

    // Permutation of cosets induced by left multiplication by g (g in G).
    Permutation induced_permutation(const Permutation& g) const;

    // Index of the coset g*H.
    int identify(const Permutation& g) const;

private:
    Permutation canonical_rep(const Permutation& x) const;

    const Bsgs* h_bsgs_; // borrowed from H's GeneratedGroup (kept alive by owner)
    std::shared_ptr<const Bsgs> h_bsgs_owned_;
    const GeneratedGroup* g_group_;
    std::vector<Permutation> transversal_;
    std::vector<Permutation> gen_images_;
    std::unordered_map<std::string, int> index_by_key_;
};

// Sum over cycles of (length - 1) = m - (#cycles); the total ramification
// excess of the induced permutation.
int ramification_excess(const Permutation& induced);

} // namespace dyngal

#endif
