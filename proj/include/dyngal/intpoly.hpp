#ifndef DYNGAL_INTPOLY_HPP
#define DYNGAL_INTPOLY_HPP

#include <initializer_list>
#include <vector>

#include "dyngal/numeric.hpp"

namespace dyngal {

// Dense univariate polynomial over Z. Coefficients are stored lowest degree
// first and trailing zeros are stripped, so the leading coefficient of a
// nonzero polynomial is never zero.
class IntPoly {
public:
    IntPoly() = default; // zero polynomial
    explicit IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { normalize(); }
    IntPoly(std::initializer_list<long> coeffs) {
        for (long v : coeffs) c_.emplace_back(v);
        normalize();
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    const BigInt& coeff(int i) const {
        static const BigInt zero{0};
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : zero;
    }
    const std::vector<BigInt>& coeffs() const { return c_; }
    const BigInt& leading() const { return c_.back(); }

    bool operator==(const IntPoly& o) const { return c_ == o.c_; }
    bool operator!=(const IntPoly& o) const { return c_ != o.c_; }

    static IntPoly x();
    static IntPoly constant(const BigInt& v);

private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<BigInt> c_;
};

IntPoly add(const IntPoly& a, const IntPoly& b);
IntPoly sub(const IntPoly& a, const IntPoly& b);
IntPoly neg(const IntPoly& a);
IntPoly mul(const IntPoly& a, const IntPoly& b);
IntPoly mul_scalar(const IntPoly& a, const BigInt& s);
IntPoly derivative(const IntPoly& a);
BigInt eval(const IntPoly& a, const BigInt& x);

BigInt content(const IntPoly& a);
IntPoly primitive_part(const IntPoly& a);

// Exact gcd over Z (primitive, positive leading coefficient times the
// content gcd): modular CRT images verified by pseudo-division, falling
// back to a primitive PRS when the images ever disagree.
IntPoly int_poly_gcd(const IntPoly& f, const IntPoly& g);

// True iff d divides f in Q[x]; integer-only via pseudo-division.
bool divides(const IntPoly& d, const IntPoly& f);

// gcd(f, f') is constant.
bool squarefree_over_Q(const IntPoly& f);

} // namespace dyngal

#endif
