#ifndef DYNGAL_TESTS_ORACLES_HPP
#define DYNGAL_TESTS_ORACLES_HPP

// Independent brute-force oracles used to freeze expected values. These stay
// deliberately naive and must not share code paths with the library
// implementations they check.

#include <algorithm>
#include <set>
#include <vector>

#include "dyngal/perm.hpp"

namespace oracles {

// Closure of a generating set by repeated multiplication (BFS).
inline std::set<dyngal::Permutation> closure(const std::vector<dyngal::Permutation>& gens,
                                             int degree, size_t limit = 2000000) {
    std::set<dyngal::Permutation> seen;
    std::vector<dyngal::Permutation> frontier;
    dyngal::Permutation id(degree);
    seen.insert(id);
    frontier.push_back(id);
    while (!frontier.empty()) {
        std::vector<dyngal::Permutation> next;
        for (const auto& a : frontier) {
            for (const auto& g : gens) {
                dyngal::Permutation c = dyngal::compose(g, a);
                if (seen.insert(c).second) {
                    next.push_back(std::move(c));
                    if (seen.size() > limit) throw std::runtime_error("closure limit hit");
                }
            }
        }
        frontier = std::move(next);
    }
    return seen;
}

// All elements commuting with z inside a fully enumerated group.
inline std::vector<dyngal::Permutation> centralizer_in(
    const std::set<dyngal::Permutation>& group, const dyngal::Permutation& z) {
    std::vector<dyngal::Permutation> out;
    for (const auto& g : group)
        if (dyngal::compose(g, z) == dyngal::compose(z, g)) out.push_back(g);
    return out;
}

// True if some s in `group` conjugates a to b.
inline bool conjugate_in(const std::set<dyngal::Permutation>& group,
                         const dyngal::Permutation& a, const dyngal::Permutation& b) {
    for (const auto& s : group)
        if (dyngal::conjugate(a, s) == b) return true;
    return false;
}

} // namespace oracles

#endif
