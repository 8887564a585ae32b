#ifndef SPECGRAPH_LAURENT_HPP
#define SPECGRAPH_LAURENT_HPP

#include "specgraph/intpoly.hpp"

#include <map>
#include <optional>
#include <string>

namespace specgraph {

// Finite integer-coefficient Laurent polynomial in y. Exponents may be
// negative; zero coefficients are never stored. Exponents are capped so a
// runaway computation fails loudly instead of allocating forever.
inline constexpr long kLaurentExponentCap = 1 << 20;

class LaurentPoly {
public:
    LaurentPoly() = default;

    static LaurentPoly term(BigInt coeff, long exponent);
    static LaurentPoly from_int_poly(const IntPoly& p);

    bool is_zero() const { return c_.empty(); }
    const std::map<long, BigInt>& terms() const { return c_; }
    BigInt coeff(long exponent) const;
    std::optional<long> min_exponent() const;
    std::optional<long> max_exponent() const;

    void add_term(const BigInt& coeff, long exponent);

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator*(const BigInt& s) const;
    LaurentPoly shifted(long k) const; // multiply by y^k
    bool operator==(const LaurentPoly& o) const { return c_ == o.c_; }
    bool operator!=(const LaurentPoly& o) const { return c_ != o.c_; }

    // smallest exponent whose coefficients differ, if any
    std::optional<long> first_mismatch(const LaurentPoly& o) const;

    std::string to_string(const std::string& var = "y") const;

private:
    static void check_exponent(long e);
    std::map<long, BigInt> c_;
};

enum class MatrixKind { A, L, Q };

const char* to_string(MatrixKind kind);
MatrixKind matrix_kind_from_string(const std::string& s);

// y^{deg p} * p(x(y)) where x(y) = (y+1)^2/y for the L and Q substitution
// (y^2-(x-2)y+1 = 0) and x(y) = (y^2+1)/y for the A substitution
// (y^2-xy+1 = 0). Exact; the result is an honest polynomial in y.
LaurentPoly laurent_from_charpoly(const IntPoly& p, MatrixKind kind);

} // namespace specgraph

#endif
