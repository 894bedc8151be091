#ifndef DYNGAL_MODPOLY_HPP
#define DYNGAL_MODPOLY_HPP

#include <cstdint>
#include <vector>

#include "dyngal/intpoly.hpp"
#include "dyngal/perm.hpp"

namespace dyngal {

// Dense polynomial over F_p, coefficients in [0,p), lowest degree first.
class ModPoly {
public:
    ModPoly() : p_(2) {}
    explicit ModPoly(std::uint64_t p) : p_(p) {}
    ModPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs) : p_(p), c_(std::move(coeffs)) {
        normalize();
    }

    std::uint64_t prime() const { return p_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    std::uint64_t coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : 0;
    }
    const std::vector<std::uint64_t>& coeffs() const { return c_; }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    bool operator==(const ModPoly& o) const { return p_ == o.p_ && c_ == o.c_; }

private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    friend ModPoly mod_trim(ModPoly a);
    std::uint64_t p_;
    std::vector<std::uint64_t> c_;
};

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t p);

ModPoly mod_reduce(const IntPoly& f, std::uint64_t p);
ModPoly mod_add(const ModPoly& a, const ModPoly& b);
ModPoly mod_sub(const ModPoly& a, const ModPoly& b);
ModPoly mod_mul(const ModPoly& a, const ModPoly& b);
ModPoly mod_rem(const ModPoly& a, const ModPoly& b);
ModPoly mod_gcd(ModPoly a, ModPoly b); // monic (or zero)
ModPoly mod_monic(const ModPoly& a);
ModPoly mod_derivative(const ModPoly& a);
// base^e mod f by repeated squaring
ModPoly mod_powmod(const ModPoly& base, std::uint64_t e, const ModPoly& f);

// Multiset of irreducible factor degrees of a monic squarefree f over F_p,
// by distinct-degree splitting only (no equal-degree stage). Throws
// NotSquarefree when gcd(f, f') != 1.
CyclePattern distinct_degree_pattern(const ModPoly& f);

} // namespace dyngal

#endif
