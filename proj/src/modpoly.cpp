#include "dyngal/modpoly.hpp"

#include <algorithm>

#include "dyngal/errors.hpp"

namespace dyngal {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t acc = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) acc = mulmod_u64(acc, a, p);
        a = mulmod_u64(a, a, p);
        e >>= 1;
    }
    return acc;
}

std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t p) { return powmod_u64(a, p - 2, p); }

ModPoly mod_reduce(const IntPoly& f, std::uint64_t p) {
    std::vector<std::uint64_t> c(f.degree() + 1);
    for (int i = 0; i <= f.degree(); ++i)
        c[i] = mpz_fdiv_ui(f.coeff(i).get_mpz_t(), static_cast<unsigned long>(p));
    return ModPoly(p, std::move(c));
}

ModPoly mod_add(const ModPoly& a, const ModPoly& b) {
    std::uint64_t p = a.prime();
    std::vector<std::uint64_t> c(std::max(a.degree(), b.degree()) + 1, 0);
    for (size_t i = 0; i < c.size(); ++i) {
        std::uint64_t v = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
        c[i] = v >= p ? v - p : v;
    }
    return ModPoly(p, std::move(c));
}

ModPoly mod_sub(const ModPoly& a, const ModPoly& b) {
    std::uint64_t p = a.prime();
    std::vector<std::uint64_t> c(std::max(a.degree(), b.degree()) + 1, 0);
    for (size_t i = 0; i < c.size(); ++i) {
        std::uint64_t av = a.coeff(static_cast<int>(i)), bv = b.coeff(static_cast<int>(i));
        c[i] = av >= bv ? av - bv : av + p - bv;
    }
    return ModPoly(p, std::move(c));
}

ModPoly mod_mul(const ModPoly& a, const ModPoly& b) {
    std::uint64_t p = a.prime();
    if (a.is_zero() || b.is_zero()) return ModPoly(p);
    std::vector<std::uint64_t> c(a.degree() + b.degree() + 1, 0);
    for (int i = 0; i <= a.degree(); ++i) {
        if (a.coeff(i) == 0) continue;
        for (int j = 0; j <= b.degree(); ++j) {
            std::uint64_t v = c[i + j] + mulmod_u64(a.coeff(i), b.coeff(j), p);
            c[i + j] = v >= p ? v - p : v;
        }
    }
    return ModPoly(p, std::move(c));
}

ModPoly mod_rem(const ModPoly& a, const ModPoly& b) {
    std::uint64_t p = a.prime();
    if (b.is_zero()) throw InvalidParameters("division by zero polynomial");
    std::vector<std::uint64_t> r(a.coeffs());
    std::uint64_t lc_inv = invmod_u64(b.coeff(b.degree()), p);
    int db = b.degree();
    for (int i = static_cast<int>(r.size()) - 1; i >= db; --i) {
        if (r[i] == 0) continue;
        std::uint64_t q = mulmod_u64(r[i], lc_inv, p);
        for (int j = 0; j <= db; ++j) {
            std::uint64_t sub = mulmod_u64(q, b.coeff(j), p);
            std::uint64_t& dst = r[i - db + j];
            dst = dst >= sub ? dst - sub : dst + p - sub;
        }
    }
    r.resize(std::min<size_t>(r.size(), db));
    return ModPoly(p, std::move(r));
}

ModPoly mod_monic(const ModPoly& a) {
    if (a.is_zero() || a.is_monic()) return a;
    std::uint64_t p = a.prime();
    std::uint64_t inv = invmod_u64(a.coeff(a.degree()), p);
    std::vector<std::uint64_t> c(a.coeffs());
    for (auto& v : c) v = mulmod_u64(v, inv, p);
    return ModPoly(p, std::move(c));
}

ModPoly mod_gcd(ModPoly a, ModPoly b) {
    while (!b.is_zero()) {
        ModPoly r = mod_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return mod_monic(a);
}

ModPoly mod_derivative(const ModPoly& a) {
    std::uint64_t p = a.prime();
    if (a.degree() < 1) return ModPoly(p);
    std::vector<std::uint64_t> c(a.degree());
    for (int i = 1; i <= a.degree(); ++i) c[i - 1] = mulmod_u64(a.coeff(i), i % p, p);
    return ModPoly(p, std::move(c));
}

ModPoly mod_powmod(const ModPoly& base, std::uint64_t e, const ModPoly& f) {
    ModPoly acc(f.prime(), {1});
    ModPoly b = mod_rem(base, f);
    while (e) {
        if (e & 1) acc = mod_rem(mod_mul(acc, b), f);
        b = mod_rem(mod_mul(b, b), f);
        e >>= 1;
    }
    return acc;
}

CyclePattern distinct_degree_pattern(const ModPoly& f) {
    if (f.degree() < 1) throw InvalidParameters("expected deg >= 1");
    if (!f.is_monic()) throw InvalidParameters("expected monic polynomial");
    std::uint64_t p = f.prime();
    if (mod_gcd(f, mod_derivative(f)).degree() != 0)
        throw NotSquarefree("polynomial not squarefree mod p");

    CyclePattern out;
    ModPoly rem = f;
    ModPoly xpoly(p, {0, 1});
    ModPoly h = mod_rem(xpoly, rem); // x^(p^0) will be powered up stage by stage
    int d = 0;
    while (rem.degree() > 0) {
        ++d;
        if (2 * d > rem.degree()) {
            out.push_back(rem.degree());
            break;
        }
        h = mod_powmod(h, p, rem); // h = x^(p^d) mod rem
        ModPoly g = mod_gcd(mod_sub(h, xpoly), rem);
        if (g.degree() > 0) {
            for (int k = 0; k < g.degree() / d; ++k) out.push_back(d);
            // rem /= g
            ModPoly quot;
            {
                // exact division: rem = q*g, both monic
                std::vector<std::uint64_t> r(rem.coeffs());
                int dg = g.degree();
                std::vector<std::uint64_t> q(rem.degree() - dg + 1, 0);
                for (int i = static_cast<int>(r.size()) - 1; i >= dg; --i) {
                    std::uint64_t qc = r[i];
                    if (qc == 0) continue;
                    q[i - dg] = qc;
                    for (int j = 0; j <= dg; ++j) {
                        std::uint64_t sub = mulmod_u64(qc, g.coeff(j), p);
                        std::uint64_t& dst = r[i - dg + j];
                        dst = dst >= sub ? dst - sub : dst + p - sub;
                    }
                }
                quot = ModPoly(p, std::move(q));
            }
            rem = quot;
            if (rem.degree() > 0) h = mod_rem(h, rem);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace dyngal
