#ifndef SPECGRAPH_ROOTS_HPP
#define SPECGRAPH_ROOTS_HPP

#include "specgraph/intpoly.hpp"

#include <vector>
#include <utility>

namespace specgraph {

// Yun square-free decomposition of a nonzero polynomial: p = c * prod f_i^{m_i}
// with the f_i primitive, square-free and pairwise coprime. Constant factors
// are dropped.
std::vector<std::pair<IntPoly, int>> square_free_decomposition(const IntPoly& p);

// Exact count, with multiplicity, of the real roots of p in (bound, +inf);
// with strict == false the roots at bound itself are included. Eigenvalues
// such as 2 occur exactly in this problem domain, so everything runs over
// the rationals (square-free split + Sturm chains), never floating point.
long count_roots_greater(const IntPoly& p, const BigRat& bound, bool strict);

// Multiplicity of `root` as a zero of p (0 if not a root).
int root_multiplicity(const IntPoly& p, const BigRat& root);

} // namespace specgraph

#endif
