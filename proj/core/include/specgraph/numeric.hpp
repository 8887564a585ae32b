#ifndef SPECGRAPH_NUMERIC_HPP
#define SPECGRAPH_NUMERIC_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace specgraph {

using BigInt = mpz_class;
using BigRat = mpq_class;

// Thrown when a request exceeds a configured enumeration or size ceiling.
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

inline int sign_of(const BigInt& v) { return sgn(v); }
inline int sign_of(const BigRat& v) { return sgn(v); }

inline BigInt pow_int(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// (-1)^e without materializing a power
inline int alt_sign(long e) { return (e % 2 == 0) ? 1 : -1; }

} // namespace specgraph

#endif
