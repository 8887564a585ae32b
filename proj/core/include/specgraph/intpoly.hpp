#ifndef SPECGRAPH_INTPOLY_HPP
#define SPECGRAPH_INTPOLY_HPP

#include "specgraph/numeric.hpp"

#include <vector>
#include <string>
#include <initializer_list>

namespace specgraph {

// Dense univariate polynomial over arbitrary-precision integers.
// Coefficients are stored constant term first; the representation is
// normalized so the leading coefficient is nonzero (the zero polynomial
// has an empty coefficient vector and degree -1).
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { normalize(); }
    IntPoly(std::initializer_list<long> coeffs);

    static IntPoly zero() { return IntPoly{}; }
    static IntPoly constant(BigInt v);
    static IntPoly x();                       // the monomial x
    static IntPoly monomial(BigInt coeff, int exponent);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const BigInt& leading() const;
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    // coefficient of x^i; zero outside the stored range
    const BigInt& coeff(int i) const;
    const std::vector<BigInt>& coeffs() const { return c_; }

    IntPoly operator-() const;
    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator*(const BigInt& s) const;
    bool operator==(const IntPoly& o) const { return c_ == o.c_; }
    bool operator!=(const IntPoly& o) const { return c_ != o.c_; }

    IntPoly shifted(int k) const;             // multiply by x^k
    IntPoly derivative() const;

    // exact division by x^k; throws std::invalid_argument if not divisible
    IntPoly divide_by_x(int k) const;
    // exact polynomial division; throws std::invalid_argument when the
    // divisor does not divide *this over the integers
    IntPoly divide_exact(const IntPoly& divisor) const;

    BigRat eval(const BigRat& x) const;       // exact Horner evaluation
    BigInt eval(const BigInt& x) const;

    BigInt content() const;                   // gcd of coefficients (0 for zero poly)
    IntPoly primitive_part() const;           // content and sign stripped (leading > 0)

    std::string to_string(const std::string& var = "x") const;

private:
    void normalize();
    std::vector<BigInt> c_;
};

IntPoly gcd(const IntPoly& a, const IntPoly& b); // primitive, positive leading coeff

// Largest j such that x^j divides p (0 for p = 0 taken as an error).
int zero_multiplicity(const IntPoly& p);

// k-th power sum of the roots of a monic polynomial, via Newton's identities.
// k is capped at kMaxMomentOrder; the paper's arguments never need more.
inline constexpr int kMaxMomentOrder = 4;
BigInt moments(const IntPoly& p, int k);

} // namespace specgraph

#endif
