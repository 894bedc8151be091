#ifndef DYNGAL_BSGS_HPP
#define DYNGAL_BSGS_HPP

#include <functional>
#include <memory>
#include <vector>

#include "dyngal/numeric.hpp"
#include "dyngal/perm.hpp"

namespace dyngal {

// Base and strong generating set built by a deterministic (non-randomized)
// Schreier-Sims. Strong generators are only ever added when they extend a
// basic orbit, so the total number stays small; orbits are extended
// incrementally and keep their discovery order, which makes every derived
// quantity (order, enumeration order, canonical coset representatives)
// reproducible across runs.
class Bsgs {
public:
    struct Level {
        int base = 0;
        std::vector<Permutation> gens;
        std::vector<int> orbit;                  // discovery order, orbit[0] == base
        std::vector<int> pos;                    // point -> orbit index, -1 if absent
        std::vector<Permutation> trans;          // trans[k] maps base -> orbit[k]
        std::vector<Permutation> trans_inv;
        std::vector<std::pair<int, int>> queue;  // unprocessed (orbit idx, gen idx)
    };

    Bsgs(int degree, const std::vector<Permutation>& generators);

    int degree() const { return degree_; }
    const std::vector<Level>& levels() const { return levels_; }

    BigInt order() const;
    bool contains(const Permutation& g) const;

    // Residue of g after dividing off transversal elements; identity iff g
    // is a member. `stuck_level` receives the first level that failed (or
    // the number of levels on success).
    Permutation sift(const Permutation& g, int* stuck_level = nullptr) const;

    // Visits every element exactly once in the deterministic DFS order over
    // transversal index tuples. Returns false if the callback stops early.
    bool for_each_element(const std::function<bool(const Permutation&)>& fn) const;

private:
    void new_level(int base_point);
    void add_generator(int level, const Permutation& g);
    void append_orbit_point(Level& lv, int point, Permutation u);
    void run();

    int degree_;
    std::vector<Level> levels_;
};

// Finitely generated permutation group with a lazily built BSGS.
class GeneratedGroup {
public:
    GeneratedGroup(int degree, std::vector<Permutation> generators);

    int degree() const { return degree_; }
    const std::vector<Permutation>& generators() const { return gens_; }

    const Bsgs& bsgs() const;
    std::shared_ptr<const Bsgs> bsgs_ptr() const {
        bsgs();
        return bsgs_;
    }
    BigInt order() const { return bsgs().order(); }
    bool contains(const Permutation& g) const;

    // Streams every element exactly once; BudgetExceeded if order > budget.
    void enumerate_elements(const BigInt& budget,
                            const std::function<void(const Permutation&)>& fn) const;
    std::vector<Permutation> elements(const BigInt& budget) const;

private:
    int degree_;
    std::vector<Permutation> gens_;
    mutable std::shared_ptr<const Bsgs> bsgs_;
};

} // namespace dyngal

#endif
