#include "dyngal/coset.hpp"

#include <string>

#include "dyngal/errors.hpp"

namespace dyngal {

namespace {

std::string image_key(const Permutation& p) {
    std::string key;
    key.resize(p.degree() * 2);
    for (int i = 0; i < p.degree(); ++i) {
        key[2 * i] = static_cast<char>(p(i) & 0xff);
        key[2 * i + 1] = static_cast<char>((p(i) >> 8) & 0xff);
    }
    return key;
}

} // namespace

CosetAction::CosetAction(const GeneratedGroup& G, const GeneratedGroup& H, long index_limit)
    : g_group_(&G) {
    if (G.degree() != H.degree()) throw DegreeMismatch();
    for (const auto& h : H.generators())
        if (!G.contains(h)) throw NotASubgroup("subgroup generator not contained in group");
    h_bsgs_owned_ = H.bsgs_ptr();
    h_bsgs_ = h_bsgs_owned_.get();

    {
        BigInt index = G.order() / H.order();
        if (index > BigInt(static_cast<long>(index_limit)))
            throw IndexLimitExceeded("coset index " + index.get_str() + " exceeds limit");
    }

    gen_images_.resize(G.generators().size());
    std::vector<std::vector<int>> images(G.generators().size());

    Permutation t0 = canonical_rep(Permutation(G.degree()));
    index_by_key_.emplace(image_key(t0), 0);
    transversal_.push_back(std::move(t0));

    for (size_t i = 0; i < transversal_.size(); ++i) {
        for (size_t gi = 0; gi < G.generators().size(); ++gi) {
            Permutation moved = compose(G.generators()[gi], transversal_[i]);
            Permutation rep = canonical_rep(moved);
            std::string key = image_key(rep);
            auto it = index_by_key_.find(key);
            int j;
            if (it == index_by_key_.end()) {
                j = static_cast<int>(transversal_.size());
                index_by_key_.emplace(std::move(key), j);
                transversal_.push_back(std::move(rep));
            } else {
                j = it->second;
            }
            images[gi].push_back(j); // images[gi][i] == j
        }
    }
    for (size_t gi = 0; gi < images.size(); ++gi)
        gen_images_[gi] = Permutation(std::move(images[gi]));
}

Permutation CosetAction::canonical_rep(const Permutation& x) const {
    Permutation y = x;
    Permutation tmp;
    for (const auto& lv : h_bsgs_->levels()) {
        int best_idx = 0;
        int best_val = y(lv.orbit[0]);
        for (size_t k = 1; k < lv.orbit.size(); ++k) {
            int v = y(lv.orbit[k]);
            if (v < best_val) {
                best_val = v;
                best_idx = static_cast<int>(k);
            }
        }
        if (best_idx != 0) {
            Permutation::compose_into(tmp, y, lv.trans[best_idx]);
            std::swap(tmp, y);
        }
    }
    return y;
}

int CosetAction::identify(const Permutation& g) const {
    Permutation rep = canonical_rep(g);
    auto it = index_by_key_.find(image_key(rep));
    if (it == index_by_key_.end()) throw NotInGroup("element not in the acting group");
    return it->second;
}

Permutation CosetAction::induced_permutation(const Permutation& g) const {
    if (!g_group_->contains(g)) throw NotInGroup();
    std::vector<int> img(coset_count());
    for (int i = 0; i < coset_count(); ++i) img[i] = identify(compose(g, transversal_[i]));
    return Permutation(std::move(img));
}

int ramification_excess(const Permutation& induced) {
    CyclePattern pat = cycle_pattern(induced);
    return induced.degree() - static_cast<int>(pat.size());
}

} // namespace dyngal
