#ifndef DYNGAL_BIPOLY_HPP
#define DYNGAL_BIPOLY_HPP

#include <vector>

#include "dyngal/intpoly.hpp"
#include "dyngal/modpoly.hpp"
#include "dyngal/numeric.hpp"

namespace dyngal {

// Polynomial in Z[t][x]: cx[k] is the coefficient of x^k as an IntPoly in t.
// Trailing zero coefficients in x are stripped.
class BiPoly {
public:
    BiPoly() = default; // zero
    explicit BiPoly(std::vector<IntPoly> cx) : cx_(std::move(cx)) { normalize(); }

    bool is_zero() const { return cx_.empty(); }
    int degree_x() const { return static_cast<int>(cx_.size()) - 1; }
    int degree_t() const;
    const IntPoly& coeff_x(int k) const {
        static const IntPoly zero;
        return (k >= 0 && k < static_cast<int>(cx_.size())) ? cx_[k] : zero;
    }
    const std::vector<IntPoly>& coeffs_x() const { return cx_; }
    bool monic_in_x() const {
        return !cx_.empty() && cx_.back().degree() == 0 && cx_.back().coeff(0) == 1;
    }

    bool operator==(const BiPoly& o) const { return cx_ == o.cx_; }
    bool operator!=(const BiPoly& o) const { return cx_ != o.cx_; }

    static BiPoly xvar();
    static BiPoly tvar();
    static BiPoly constant(const BigInt& v);

private:
    void normalize() {
        while (!cx_.empty() && cx_.back().is_zero()) cx_.pop_back();
    }
    std::vector<IntPoly> cx_;
};

BiPoly add(const BiPoly& a, const BiPoly& b);
BiPoly sub(const BiPoly& a, const BiPoly& b);
// Product via Kronecker packing into a single integer multiplication for
// large operands; schoolbook otherwise.
BiPoly mul(const BiPoly& a, const BiPoly& b);

// Quotient of an exact division by a divisor monic in x; NonExactDivision
// if any remainder coefficient survives.
BiPoly poly_exact_div(const BiPoly& num, const BiPoly& den);

// Denominator-cleared specialization t = num/den: multiply coefficient k by
// den^(T - j) for each t-power j, where T = degree_t of the whole poly.
IntPoly specialize_cleared(const BiPoly& f, const Rational& c);

// f mod p with t evaluated at the residue of c mod p; requires p not to
// divide den(c).
ModPoly specialize_mod_p(const BiPoly& f, const Rational& c, std::uint64_t p);

} // namespace dyngal

#endif
