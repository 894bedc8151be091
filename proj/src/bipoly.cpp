#include "dyngal/bipoly.hpp"

#include <algorithm>
#include <cstring>

#include "dyngal/errors.hpp"

namespace dyngal {

int BiPoly::degree_t() const {
    int d = -1;
    for (const auto& c : cx_) d = std::max(d, c.degree());
    return d;
}

BiPoly BiPoly::xvar() { return BiPoly({IntPoly(), IntPoly{1}}); }
BiPoly BiPoly::tvar() { return BiPoly({IntPoly{0, 1}}); }
BiPoly BiPoly::constant(const BigInt& v) { return BiPoly({IntPoly::constant(v)}); }

BiPoly add(const BiPoly& a, const BiPoly& b) {
    std::vector<IntPoly> c(std::max(a.degree_x(), b.degree_x()) + 1);
    for (int k = 0; k < static_cast<int>(c.size()); ++k) c[k] = add(a.coeff_x(k), b.coeff_x(k));
    return BiPoly(std::move(c));
}

BiPoly sub(const BiPoly& a, const BiPoly& b) {
    std::vector<IntPoly> c(std::max(a.degree_x(), b.degree_x()) + 1);
    for (int k = 0; k < static_cast<int>(c.size()); ++k) c[k] = sub(a.coeff_x(k), b.coeff_x(k));
    return BiPoly(std::move(c));
}

namespace {

struct PackedPoly {
    mpz_class pos, neg;
};

size_t max_coeff_bits(const BiPoly& a) {
    size_t bits = 1;
    for (const auto& cp : a.coeffs_x())
        for (const auto& c : cp.coeffs())
            if (c != 0) bits = std::max(bits, mpz_sizeinbase(c.get_mpz_t(), 2));
    return bits;
}

size_t term_count(const BiPoly& a) {
    size_t n = 0;
    for (const auto& cp : a.coeffs_x())
        for (const auto& c : cp.coeffs())
            if (c != 0) ++n;
    return n;
}

// Pack coefficients into sum_i |c_slot| * 2^(64*wps*slot), split by sign.
PackedPoly kronecker_pack(const BiPoly& a, int stride_t, int wps) {
    size_t nslots = static_cast<size_t>(a.degree_x() + 1) * stride_t;
    std::vector<std::uint64_t> pos(nslots * wps + 1, 0), neg(nslots * wps + 1, 0);
    bool any_neg = false, any_pos = false;
    for (int k = 0; k <= a.degree_x(); ++k) {
        const IntPoly& cp = a.coeff_x(k);
        for (int j = 0; j <= cp.degree(); ++j) {
            const BigInt& c = cp.coeff(j);
            if (c == 0) continue;
            size_t slot = static_cast<size_t>(k) * stride_t + j;
            std::uint64_t* dst = (c > 0 ? pos.data() : neg.data()) + slot * wps;
            size_t words = 0;
            mpz_export(dst, &words, -1, 8, 0, 0, c.get_mpz_t());
            (c > 0 ? any_pos : any_neg) = true;
        }
    }
    PackedPoly out;
    if (any_pos) mpz_import(out.pos.get_mpz_t(), pos.size(), -1, 8, 0, 0, pos.data());
    if (any_neg) mpz_import(out.neg.get_mpz_t(), neg.size(), -1, 8, 0, 0, neg.data());
    return out;
}

// Unpack a nonnegative packed integer into per-slot values.
void kronecker_unpack(const mpz_class& v, size_t nslots, int wps,
                      std::vector<BigInt>& out) {
    out.assign(nslots, BigInt(0));
    if (v == 0) return;
    std::vector<std::uint64_t> buf(nslots * wps + 2, 0);
    size_t words = 0;
    mpz_export(buf.data(), &words, -1, 8, 0, 0, v.get_mpz_t());
    for (size_t s = 0; s < nslots; ++s) {
        const std::uint64_t* src = buf.data() + s * wps;
        int top = wps - 1;
        while (top >= 0 && src[top] == 0) --top;
        if (top < 0) continue;
        mpz_import(out[s].get_mpz_t(), top + 1, -1, 8, 0, 0, src);
    }
}

BiPoly mul_schoolbook(const BiPoly& a, const BiPoly& b) {
    std::vector<IntPoly> c(a.degree_x() + b.degree_x() + 1);
    for (int i = 0; i <= a.degree_x(); ++i) {
        if (a.coeff_x(i).is_zero()) continue;
        for (int j = 0; j <= b.degree_x(); ++j) {
            if (b.coeff_x(j).is_zero()) continue;
            c[i + j] = add(c[i + j], mul(a.coeff_x(i), b.coeff_x(j)));
        }
    }
    return BiPoly(std::move(c));
}

} // namespace

BiPoly mul(const BiPoly& a, const BiPoly& b) {
    if (a.is_zero() || b.is_zero()) return BiPoly();
    size_t terms_a = term_count(a), terms_b = term_count(b);
    if (terms_a * terms_b < 4096) return mul_schoolbook(a, b);

    int stride_t = a.degree_t() + b.degree_t() + 1;
    int dx = a.degree_x() + b.degree_x();
    size_t nslots = static_cast<size_t>(dx + 1) * stride_t;
    // slot bound: (#contributing pairs) * max|a| * max|b|, two products summed
    size_t minterms = std::min(terms_a, terms_b);
    size_t slack = 2;
    while ((1ULL << slack) < 2 * minterms) ++slack;
    size_t bits = max_coeff_bits(a) + max_coeff_bits(b) + slack + 1;
    int wps = static_cast<int>((bits + 63) / 64);

    PackedPoly pa = kronecker_pack(a, stride_t, wps);
    PackedPoly pb = kronecker_pack(b, stride_t, wps);
    mpz_class plus = pa.pos * pb.pos + pa.neg * pb.neg;   // nonnegative slots
    mpz_class minus = pa.pos * pb.neg + pa.neg * pb.pos;  // nonnegative slots

    std::vector<BigInt> sp, sm;
    kronecker_unpack(plus, nslots, wps, sp);
    kronecker_unpack(minus, nslots, wps, sm);

    std::vector<IntPoly> cx(dx + 1);
    for (int k = 0; k <= dx; ++k) {
        std::vector<BigInt> col(stride_t);
        for (int j = 0; j < stride_t; ++j) {
            size_t s = static_cast<size_t>(k) * stride_t + j;
            col[j] = sp[s] - sm[s];
        }
        cx[k] = IntPoly(std::move(col));
    }
    return BiPoly(std::move(cx));
}

BiPoly poly_exact_div(const BiPoly& num, const BiPoly& den) {
    if (den.is_zero()) throw InvalidParameters("division by zero");
    if (!den.monic_in_x()) throw InvalidParameters("divisor must be monic in x");
    if (num.is_zero()) return BiPoly();
    int dn = num.degree_x(), dd = den.degree_x();
    if (dn < dd) throw NonExactDivision("degree of dividend below divisor");

    std::vector<IntPoly> rem(num.coeffs_x());
    std::vector<IntPoly> quot(dn - dd + 1);
    for (int k = dn - dd; k >= 0; --k) {
        IntPoly q = rem[k + dd];
        if (q.is_zero()) continue;
        quot[k] = q;
        for (int j = 0; j <= dd; ++j) rem[k + j] = sub(rem[k + j], mul(q, den.coeff_x(j)));
    }
    for (int j = 0; j < dd; ++j)
        if (!rem[j].is_zero()) throw NonExactDivision("nonzero remainder");
    return BiPoly(std::move(quot));
}

IntPoly specialize_cleared(const BiPoly& f, const Rational& c) {
    BigInt a = c.get_num(), b = c.get_den();
    int T = f.degree_t();
    if (T < 0) return IntPoly();
    std::vector<BigInt> apow(T + 1), bpow(T + 1);
    apow[0] = 1;
    bpow[0] = 1;
    for (int j = 1; j <= T; ++j) {
        apow[j] = apow[j - 1] * a;
        bpow[j] = bpow[j - 1] * b;
    }
    std::vector<BigInt> out(f.degree_x() + 1, BigInt(0));
    for (int k = 0; k <= f.degree_x(); ++k) {
        const IntPoly& cp = f.coeff_x(k);
        BigInt v = 0;
        for (int j = 0; j <= cp.degree(); ++j)
            if (cp.coeff(j) != 0) v += cp.coeff(j) * apow[j] * bpow[T - j];
        out[k] = v;
    }
    return IntPoly(std::move(out));
}

ModPoly specialize_mod_p(const BiPoly& f, const Rational& c, std::uint64_t p) {
    unsigned long pu = static_cast<unsigned long>(p);
    std::uint64_t bden = mpz_fdiv_ui(c.get_den_mpz_t(), pu);
    if (bden == 0) throw InvalidParameters("prime divides denominator");
    std::uint64_t cv = mulmod_u64(mpz_fdiv_ui(c.get_num_mpz_t(), pu), invmod_u64(bden, p), p);
    std::vector<std::uint64_t> out(f.degree_x() + 1, 0);
    for (int k = 0; k <= f.degree_x(); ++k) {
        const IntPoly& cp = f.coeff_x(k);
        std::uint64_t v = 0;
        for (int j = cp.degree(); j >= 0; --j) {
            v = mulmod_u64(v, cv, p);
            std::uint64_t cj = mpz_fdiv_ui(cp.coeff(j).get_mpz_t(), pu);
            v += cj;
            if (v >= p) v -= p;
        }
        out[k] = v;
    }
    return ModPoly(p, std::move(out));
}

} // namespace dyngal
