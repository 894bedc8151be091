#ifndef DYNGAL_PERM_HPP
#define DYNGAL_PERM_HPP

#include <string>
#include <vector>

#include "dyngal/errors.hpp"

namespace dyngal {

// Permutation of {1..D}, stored 0-based: img[i] is the image of point i.
// Products compose right-to-left: (a*b)(x) = a(b(x)).
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(int degree) : img_(degree) {
        for (int i = 0; i < degree; ++i) img_[i] = i;
    }
    explicit Permutation(std::vector<int> images);

    // Trusted constructor for internal use; skips the bijection check.
    static Permutation unchecked(std::vector<int> images) {
        Permutation p;
        p.img_ = std::move(images);
        return p;
    }

    // out = a*b without allocating; out must not alias a or b.
    static void compose_into(Permutation& out, const Permutation& a, const Permutation& b) {
        out.img_.resize(a.img_.size());
        for (size_t i = 0; i < a.img_.size(); ++i) out.img_[i] = a.img_[b.img_[i]];
    }

    int degree() const { return static_cast<int>(img_.size()); }
    int operator()(int point) const { return img_[point]; }
    const std::vector<int>& images() const { return img_; }

    bool is_identity() const;
    bool operator==(const Permutation& o) const { return img_ == o.img_; }
    bool operator!=(const Permutation& o) const { return img_ != o.img_; }
    bool operator<(const Permutation& o) const { return img_ < o.img_; }

private:
    std::vector<int> img_;
};

Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& a);
// conjugate(g, s) = s^{-1} g s
Permutation conjugate(const Permutation& g, const Permutation& by);

// Multiset of cycle lengths including fixed points; sorted ascending.
using CyclePattern = std::vector<int>;

CyclePattern cycle_pattern(const Permutation& g);

// 0 for even permutations, 1 for odd.
int parity(const Permutation& g);

int count_fixed_points(const Permutation& g);

// Cycle notation I/O, 1-based points; identity prints as "()".
std::string to_cycle_string(const Permutation& g);
Permutation parse_permutation(const std::string& text, int degree);

} // namespace dyngal

#endif
