#include "dyngal/intpoly.hpp"

#include <algorithm>

#include "dyngal/errors.hpp"
#include "dyngal/modpoly.hpp"

namespace dyngal {

IntPoly IntPoly::x() { return IntPoly{0, 1}; }

IntPoly IntPoly::constant(const BigInt& v) {
    std::vector<BigInt> c{v};
    return IntPoly(std::move(c));
}

IntPoly add(const IntPoly& a, const IntPoly& b) {
    std::vector<BigInt> c(std::max(a.degree(), b.degree()) + 1);
    for (int i = 0; i < static_cast<int>(c.size()); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return IntPoly(std::move(c));
}

IntPoly sub(const IntPoly& a, const IntPoly& b) {
    std::vector<BigInt> c(std::max(a.degree(), b.degree()) + 1);
    for (int i = 0; i < static_cast<int>(c.size()); ++i) c[i] = a.coeff(i) - b.coeff(i);
    return IntPoly(std::move(c));
}

IntPoly neg(const IntPoly& a) {
    std::vector<BigInt> c(a.coeffs());
    for (auto& v : c) v = -v;
    return IntPoly(std::move(c));
}

IntPoly mul(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<BigInt> c(a.degree() + b.degree() + 1, BigInt(0));
    for (int i = 0; i <= a.degree(); ++i) {
        if (a.coeff(i) == 0) continue;
        for (int j = 0; j <= b.degree(); ++j) {
            if (b.coeff(j) == 0) continue;
            c[i + j] += a.coeff(i) * b.coeff(j);
        }
    }
    return IntPoly(std::move(c));
}

IntPoly mul_scalar(const IntPoly& a, const BigInt& s) {
    if (s == 0) return IntPoly();
    std::vector<BigInt> c(a.coeffs());
    for (auto& v : c) v *= s;
    return IntPoly(std::move(c));
}

IntPoly derivative(const IntPoly& a) {
    if (a.degree() < 1) return IntPoly();
    std::vector<BigInt> c(a.degree());
    for (int i = 1; i <= a.degree(); ++i) c[i - 1] = a.coeff(i) * i;
    return IntPoly(std::move(c));
}

BigInt eval(const IntPoly& a, const BigInt& x) {
    BigInt v = 0;
    for (int i = a.degree(); i >= 0; --i) v = v * x + a.coeff(i);
    return v;
}

BigInt content(const IntPoly& a) {
    BigInt g = 0;
    for (const auto& c : a.coeffs()) {
        BigInt t;
        mpz_gcd(t.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        g = t;
        if (g == 1) break;
    }
    return g;
}

IntPoly primitive_part(const IntPoly& a) {
    if (a.is_zero()) return a;
    BigInt cont = content(a);
    if (a.leading() < 0) cont = -cont;
    std::vector<BigInt> c(a.coeffs());
    for (auto& v : c) v /= cont;
    return IntPoly(std::move(c));
}

bool divides(const IntPoly& d, const IntPoly& f) {
    if (d.is_zero()) return f.is_zero();
    if (f.is_zero()) return true;
    if (d.degree() > f.degree()) return false;
    if (d.degree() == 0) return true;
    // pseudo-remainder: lc(d)^k * f mod d; zero iff d | f in Q[x]
    std::vector<BigInt> r(f.coeffs());
    const BigInt& lc = d.leading();
    int dd = d.degree();
    for (int i = static_cast<int>(r.size()) - 1; i >= dd; --i) {
        BigInt q = r[i];
        if (q == 0) continue;
        for (int j = 0; j < i; ++j) r[j] *= lc;
        for (int j = 0; j <= dd; ++j) r[i - dd + j] -= q * d.coeff(j);
    }
    for (int j = 0; j < dd; ++j)
        if (r[j] != 0) return false;
    return true;
}

namespace {

IntPoly sign_normalized(const IntPoly& a) {
    if (!a.is_zero() && a.leading() < 0) return neg(a);
    return a;
}

// primitive PRS gcd, used as fallback
IntPoly prs_gcd(IntPoly f, IntPoly g) {
    f = primitive_part(f);
    g = primitive_part(g);
    if (f.degree() < g.degree()) std::swap(f, g);
    while (!g.is_zero()) {
        std::vector<BigInt> r(f.coeffs());
        const BigInt& lc = g.leading();
        int dg = g.degree();
        for (int i = static_cast<int>(r.size()) - 1; i >= dg; --i) {
            BigInt q = r[i];
            for (int j = 0; j < i; ++j) r[j] *= lc;
            for (int j = 0; j <= dg; ++j) r[i - dg + j] -= q * g.coeff(j);
            r[i] = 0;
        }
        r.resize(dg);
        f = std::move(g);
        g = primitive_part(IntPoly(std::move(r)));
    }
    return sign_normalized(f);
}

// Descending 62-bit primes: fast CRT growth, deterministic order.
std::uint64_t next_gcd_prime(std::uint64_t prev) {
    std::uint64_t n = prev == 0 ? ((1ULL << 62) - 1) : prev - 1;
    while (true) {
        mpz_class z(static_cast<unsigned long>(n));
        if (mpz_probab_prime_p(z.get_mpz_t(), 30) > 0) return n;
        --n;
    }
}

} // namespace

IntPoly int_poly_gcd(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero()) return sign_normalized(g);
    if (g.is_zero()) return sign_normalized(f);

    BigInt cf = content(f), cg = content(g), cont;
    mpz_gcd(cont.get_mpz_t(), cf.get_mpz_t(), cg.get_mpz_t());
    IntPoly fp = primitive_part(f), gp = primitive_part(g);
    if (fp.degree() == 0 || gp.degree() == 0) return IntPoly::constant(cont);

    BigInt gamma;
    mpz_gcd(gamma.get_mpz_t(), fp.leading().get_mpz_t(), gp.leading().get_mpz_t());

    std::uint64_t p = 0;
    int best_deg = -1;
    std::vector<BigInt> crt;
    BigInt modulus = 1;
    IntPoly last_candidate;
    for (int iter = 0; iter < 100; ++iter) {
        p = next_gcd_prime(p);
        unsigned long pu = static_cast<unsigned long>(p);
        if (mpz_fdiv_ui(fp.leading().get_mpz_t(), pu) == 0 ||
            mpz_fdiv_ui(gp.leading().get_mpz_t(), pu) == 0)
            continue;
        ModPoly mg = mod_gcd(mod_reduce(fp, p), mod_reduce(gp, p));
        if (mg.degree() == 0) return IntPoly::constant(cont);
        if (best_deg < 0 || mg.degree() < best_deg) {
            best_deg = mg.degree();
            crt.assign(best_deg + 1, BigInt(0));
            modulus = 1;
            last_candidate = IntPoly();
        } else if (mg.degree() > best_deg) {
            continue; // unlucky prime
        }
        std::uint64_t gm = mpz_fdiv_ui(gamma.get_mpz_t(), pu);
        std::uint64_t minv = invmod_u64(mpz_fdiv_ui(modulus.get_mpz_t(), pu), p);
        for (int i = 0; i <= best_deg; ++i) {
            std::uint64_t target = mulmod_u64(gm, mg.coeff(i), p);
            std::uint64_t cur = mpz_fdiv_ui(crt[i].get_mpz_t(), pu);
            std::uint64_t diff = target >= cur ? target - cur : target + p - cur;
            std::uint64_t t = mulmod_u64(diff, minv, p);
            crt[i] += modulus * BigInt(static_cast<unsigned long>(t));
        }
        modulus *= BigInt(pu);
        std::vector<BigInt> lifted(best_deg + 1);
        BigInt half = modulus / 2;
        for (int i = 0; i <= best_deg; ++i) {
            BigInt v = crt[i];
            if (v > half) v -= modulus;
            lifted[i] = v;
        }
        IntPoly candidate = primitive_part(IntPoly(std::move(lifted)));
        if (!candidate.is_zero() && candidate == last_candidate) {
            if (divides(candidate, fp) && divides(candidate, gp))
                return mul_scalar(candidate, cont);
        }
        last_candidate = candidate;
    }
    return mul_scalar(prs_gcd(fp, gp), cont);
}

bool squarefree_over_Q(const IntPoly& f) {
    if (f.degree() < 1) throw InvalidParameters("squarefree check needs deg >= 1");
    IntPoly fd = derivative(f);
    // one good prime with a constant gcd certifies squarefreeness
    std::uint64_t p = 0;
    for (int tries = 0; tries < 3; ++tries) {
        p = next_gcd_prime(p);
        if (mpz_fdiv_ui(f.leading().get_mpz_t(), static_cast<unsigned long>(p)) == 0) continue;
        ModPoly gg = mod_gcd(mod_reduce(f, p), mod_reduce(fd, p));
        if (gg.degree() == 0) return true;
    }
    return int_poly_gcd(f, fd).degree() == 0;
}

} // namespace dyngal
