#include "dyngal/bsgs.hpp"

#include <algorithm>

#include "dyngal/errors.hpp"

namespace dyngal {

namespace {

int smallest_moved_point(const Permutation& g) {
    for (int i = 0; i < g.degree(); ++i)
        if (g(i) != i) return i;
    return -1;
}

} // namespace

Bsgs::Bsgs(int degree, const std::vector<Permutation>& generators) : degree_(degree) {
    for (const auto& g : generators) {
        if (g.degree() != degree_) throw DegreeMismatch("generator degree mismatch");
        if (g.is_identity()) continue;
        // deepest level whose base prefix g fixes; extend the base if needed
        size_t assigned = 0;
        while (assigned < levels_.size() && g(levels_[assigned].base) == levels_[assigned].base)
            ++assigned;
        if (assigned == levels_.size()) new_level(smallest_moved_point(g));
        // g belongs to S^(l) for every l <= assigned
        for (size_t l = 0; l <= assigned; ++l) add_generator(static_cast<int>(l), g);
    }
    run();
}

void Bsgs::new_level(int base_point) {
    Level lv;
    lv.base = base_point;
    lv.orbit.push_back(base_point);
    lv.pos.assign(degree_, -1);
    lv.pos[base_point] = 0;
    lv.trans.push_back(Permutation(degree_));
    lv.trans_inv.push_back(Permutation(degree_));
    levels_.push_back(std::move(lv));
}

void Bsgs::append_orbit_point(Level& lv, int point, Permutation u) {
    lv.pos[point] = static_cast<int>(lv.orbit.size());
    lv.orbit.push_back(point);
    lv.trans_inv.push_back(inverse(u));
    lv.trans.push_back(std::move(u));
    for (size_t gi = 0; gi < lv.gens.size(); ++gi)
        lv.queue.emplace_back(lv.pos[point], static_cast<int>(gi));
}

void Bsgs::add_generator(int level, const Permutation& g) {
    Level& lv = levels_[level];
    lv.gens.push_back(g);
    int gen_idx = static_cast<int>(lv.gens.size()) - 1;
    // every (orbit point, new generator) pair needs verification
    for (size_t k = 0; k < lv.orbit.size(); ++k)
        lv.queue.emplace_back(static_cast<int>(k), gen_idx);
    // extend the orbit: apply the new generator to existing points, then
    // close under all generators from the freshly discovered frontier
    size_t existing = lv.orbit.size();
    for (size_t k = 0; k < existing; ++k) {
        int img = lv.gens[gen_idx](lv.orbit[k]);
        if (lv.pos[img] < 0) append_orbit_point(lv, img, compose(lv.gens[gen_idx], lv.trans[k]));
    }
    size_t scan = existing;
    while (scan < lv.orbit.size()) {
        for (size_t gi = 0; gi < lv.gens.size(); ++gi) {
            int img = lv.gens[gi](lv.orbit[scan]);
            if (lv.pos[img] < 0) append_orbit_point(lv, img, compose(lv.gens[gi], lv.trans[scan]));
        }
        ++scan;
    }
}

Permutation Bsgs::sift(const Permutation& g, int* stuck_level) const {
    Permutation h = g;
    for (size_t l = 0; l < levels_.size(); ++l) {
        const Level& lv = levels_[l];
        int x = h(lv.base);
        if (x == lv.base) continue;
        int k = lv.pos[x];
        if (k < 0) {
            if (stuck_level) *stuck_level = static_cast<int>(l);
            return h;
        }
        h = compose(lv.trans_inv[k], h);
    }
    if (stuck_level) *stuck_level = static_cast<int>(levels_.size());
    return h;
}

void Bsgs::run() {
    int i = static_cast<int>(levels_.size()) - 1;
    while (i >= 0) {
        Level& lv = levels_[i];
        bool complete = true;
        while (!lv.queue.empty()) {
            auto [k, gi] = lv.queue.back();
            lv.queue.pop_back();
            const Permutation& s = lv.gens[gi];
            int p = lv.orbit[k];
            int sp = s(p);
            // Schreier generator u_{s(p)}^{-1} * s * u_p; fixes base[0..i]
            Permutation sch = compose(lv.trans_inv[lv.pos[sp]], compose(s, lv.trans[k]));
            if (sch.is_identity()) continue;
            int stuck = static_cast<int>(levels_.size());
            Permutation h = sch;
            for (size_t l = static_cast<size_t>(i) + 1; l < levels_.size(); ++l) {
                const Level& dl = levels_[l];
                int x = h(dl.base);
                if (x == dl.base) continue;
                int kk = dl.pos[x];
                if (kk < 0) {
                    stuck = static_cast<int>(l);
                    break;
                }
                h = compose(dl.trans_inv[kk], h);
            }
            if (h.is_identity()) continue;
            if (stuck == static_cast<int>(levels_.size())) new_level(smallest_moved_point(h));
            for (int l = i + 1; l <= stuck; ++l) add_generator(l, h);
            i = stuck;
            complete = false;
            break;
        }
        if (complete) --i;
    }
}

BigInt Bsgs::order() const {
    BigInt n = 1;
    for (const auto& lv : levels_) n *= BigInt(static_cast<unsigned long>(lv.orbit.size()));
    return n;
}

bool Bsgs::contains(const Permutation& g) const {
    if (g.degree() != degree_) throw DegreeMismatch();
    if (g.is_identity()) return true;
    return sift(g).is_identity();
}

bool Bsgs::for_each_element(const std::function<bool(const Permutation&)>& fn) const {
    if (levels_.empty()) return fn(Permutation(degree_));
    // DFS: element = trans_0[i0] * trans_1[i1] * ... (rightmost acts first)
    std::vector<Permutation> prefix(levels_.size() + 1);
    prefix[0] = Permutation(degree_);
    std::vector<size_t> idx(levels_.size(), 0);
    size_t depth = 0;
    while (true) {
        if (idx[depth] < levels_[depth].orbit.size()) {
            Permutation::compose_into(prefix[depth + 1], prefix[depth],
                                      levels_[depth].trans[idx[depth]]);
            if (depth + 1 == levels_.size()) {
                if (!fn(prefix[depth + 1])) return false;
                ++idx[depth];
            } else {
                ++depth;
                idx[depth] = 0;
            }
        } else {
            if (depth == 0) break;
            --depth;
            ++idx[depth];
        }
    }
    return true;
}

GeneratedGroup::GeneratedGroup(int degree, std::vector<Permutation> generators)
    : degree_(degree), gens_(std::move(generators)) {
    for (const auto& g : gens_)
        if (g.degree() != degree_) throw DegreeMismatch("generator degree mismatch");
}

const Bsgs& GeneratedGroup::bsgs() const {
    if (!bsgs_) bsgs_ = std::make_shared<const Bsgs>(degree_, gens_);
    return *bsgs_;
}

bool GeneratedGroup::contains(const Permutation& g) const {
    if (g.degree() != degree_) throw DegreeMismatch();
    return bsgs().contains(g);
}

void GeneratedGroup::enumerate_elements(const BigInt& budget,
                                        const std::function<void(const Permutation&)>& fn) const {
    if (order() > budget) throw BudgetExceeded("group order exceeds enumeration budget");
    bsgs().for_each_element([&](const Permutation& g) {
        fn(g);
        return true;
    });
}

std::vector<Permutation> GeneratedGroup::elements(const BigInt& budget) const {
    std::vector<Permutation> out;
    enumerate_elements(budget, [&](const Permutation& g) { out.push_back(g); });
    return out;
}

} // namespace dyngal
