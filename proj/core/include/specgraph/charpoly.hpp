#ifndef SPECGRAPH_CHARPOLY_HPP
#define SPECGRAPH_CHARPOLY_HPP

#include "specgraph/graph.hpp"
#include "specgraph/intpoly.hpp"
#include "specgraph/laurent.hpp"

#include <vector>

namespace specgraph {

using IntMatrix = std::vector<std::vector<long>>;

// A(G), L(G) = D - A, or Q(G) = D + A as a dense integer matrix.
IntMatrix matrix_of(const Graph& g, MatrixKind kind);

// det(xI - M), exact and division-free (Samuelson-Berkowitz). The result is
// monic of degree n and independent of vertex labeling.
IntPoly charpoly(const IntMatrix& m);
IntPoly charpoly(const Graph& g, MatrixKind kind);

// charpoly of the principal submatrix with the given rows/columns removed
// (phi(L_v) and the B_n / U_n path matrices are all of this shape).
IntPoly principal_minor_charpoly(const IntMatrix& m, const std::vector<int>& deleted);
IntPoly principal_minor_charpoly(const Graph& g, MatrixKind kind, const std::vector<int>& deleted);

// Exact rational evaluation.
BigRat eval_at(const IntPoly& p, const BigRat& x);

} // namespace specgraph

#endif
