#include "dyngal/dynatomic.hpp"

#include <algorithm>

#include "dyngal/errors.hpp"

namespace dyngal {

BigInt nu(int s) {
    if (s < 1) throw InvalidParameters("nu needs s >= 1");
    BigInt acc = 0;
    for (int d = 1; d <= s; ++d) {
        if (s % d) continue;
        int mu = mobius(static_cast<std::uint64_t>(s / d));
        if (mu == 0) continue;
        BigInt term = BigInt(1) << d;
        acc += mu > 0 ? term : -term;
    }
    return acc / 2;
}

WreathParams dynatomic_params(int n) {
    if (n < 1) throw InvalidParameters("n must be positive");
    BigInt D = 2 * nu(n);
    if (D % n != 0) throw InvalidParameters("n does not divide 2*nu(n)");
    long Dl = mpz_get_si(D.get_mpz_t());
    return WreathParams(n, static_cast<int>(Dl / n));
}

DynatomicInstance build_dynatomic(int n) {
    if (n < 1) throw InvalidParameters("n must be positive");
    // phi^d(x) - x for all divisors d of n, phi(x) = x^2 + t
    BiPoly x = BiPoly::xvar();
    BiPoly t = BiPoly::tvar();
    std::vector<BiPoly> iterate_minus_x(n + 1);
    BiPoly cur = x;
    for (int d = 1; d <= n; ++d) {
        cur = add(mul(cur, cur), t);
        if (n % d == 0) iterate_minus_x[d] = sub(cur, x);
    }

    BiPoly num = BiPoly::constant(1), den = BiPoly::constant(1);
    for (int d = 1; d <= n; ++d) {
        if (n % d) continue;
        int mu = mobius(static_cast<std::uint64_t>(n / d));
        if (mu == 1)
            num = mul(num, iterate_minus_x[d]);
        else if (mu == -1)
            den = mul(den, iterate_minus_x[d]);
    }
    BiPoly phi_n = poly_exact_div(num, den);

    BigInt expect = 2 * nu(n);
    if (BigInt(phi_n.degree_x()) != expect)
        throw NonExactDivision("dynatomic degree check failed");
    int D = phi_n.degree_x();
    int r = D / n;
    return DynatomicInstance{n, std::move(phi_n), D, r, WreathParams(n, r)};
}

long delta_degree(int n, int d) {
    if (n < 1 || d < 1 || n % d != 0) throw NotADivisor("d must divide n");
    if (d < n) {
        BigInt v = nu(d) * BigInt(static_cast<unsigned long>(euler_phi(static_cast<std::uint64_t>(n / d))));
        return mpz_get_si(v.get_mpz_t());
    }
    BigInt acc = nu(n);
    for (int k = 1; k < n; ++k) {
        if (n % k) continue;
        acc -= nu(k) * BigInt(static_cast<unsigned long>(euler_phi(static_cast<std::uint64_t>(n / k))));
    }
    return mpz_get_si(acc.get_mpz_t());
}

std::vector<PlaceClass> place_classes(int n) {
    std::vector<PlaceClass> out;
    out.push_back(PlaceClass{true, 0, 1});
    for (int d = n; d >= 1; --d) {
        if (n % d) continue;
        out.push_back(PlaceClass{false, d, delta_degree(n, d)});
    }
    return out;
}

Specialization specialize(const DynatomicInstance& inst, const Rational& c) {
    IntPoly f = specialize_cleared(inst.poly, c);
    return Specialization{f, squarefree_over_Q(f)};
}

std::optional<CyclePattern> frobenius_pattern(const DynatomicInstance& inst, const Rational& c,
                                              std::uint64_t p) {
    if (mpz_fdiv_ui(c.get_den_mpz_t(), static_cast<unsigned long>(p)) == 0) return std::nullopt;
    ModPoly fp = specialize_mod_p(inst.poly, c, p);
    // monic in x, so no degree drop mod p
    try {
        return distinct_degree_pattern(fp);
    } catch (const NotSquarefree&) {
        return std::nullopt;
    }
}

} // namespace dyngal
