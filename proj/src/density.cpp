#include "dyngal/density.hpp"

#include "dyngal/dynatomic.hpp"
#include "dyngal/errors.hpp"
#include "dyngal/perm.hpp"

namespace dyngal {

BigInt derangement_like(int r, int i) {
    if (i < 0 || i > r) throw InvalidParameters("need 0 <= i <= r");
    int m = r - i;
    // subfactorial over the common denominator m!: sum (-1)^k m!/k!
    BigInt sub = 0;
    for (int k = 0; k <= m; ++k) {
        BigInt term = factorial(static_cast<unsigned long>(m)) / factorial(static_cast<unsigned long>(k));
        sub += (k % 2 == 0) ? term : -term;
    }
    return binomial(static_cast<unsigned long>(r), static_cast<unsigned long>(i)) * sub;
}

BigInt fixed_point_free_count(int n, int r) {
    BigInt total = 0;
    for (int i = 0; i <= r; ++i) {
        BigInt weight = pow_bigint(BigInt(n - 1), static_cast<unsigned long>(i)) *
                        pow_bigint(BigInt(n), static_cast<unsigned long>(r - i));
        total += weight * derangement_like(r, i);
    }
    return total;
}

DensityResult density_T(int n) {
    WreathParams params = dynatomic_params(n);
    DensityResult res;
    res.n = n;
    res.count = fixed_point_free_count(params.n, params.r);
    res.group_order = pow_bigint(BigInt(params.n), static_cast<unsigned long>(params.r)) *
                      factorial(static_cast<unsigned long>(params.r));
    res.density = Rational(res.count) / Rational(res.group_order);
    res.density.canonicalize();
    res.decimal = decimal_round(res.density, 4);
    return res;
}

Rational density_from_group(const GeneratedGroup& G, const BigInt& budget) {
    BigInt with_fixed = 0;
    G.enumerate_elements(budget, [&](const Permutation& g) {
        if (count_fixed_points(g) > 0) ++with_fixed;
    });
    Rational d = Rational(with_fixed) / Rational(G.order());
    d.canonicalize();
    return d;
}

} // namespace dyngal
