#ifndef SPECGRAPH_PATH_FAMILY_HPP
#define SPECGRAPH_PATH_FAMILY_HPP

#include "specgraph/intpoly.hpp"

#include <array>
#include <optional>

namespace specgraph {

// Laplacian characteristic polynomials of the path family, built from the
// three-term recurrence phi(L(P_{n+1})) = (x-2) phi(L(P_n)) - phi(L(P_{n-1}))
// with phi(L(P_0)) = 0, and the companion matrices
//   B_n : L(P_{n+1}) with one end row/column deleted,
//   U_n : L(P_{n+2}) with both end rows/columns deleted.
// phi_cycle is defined for n >= 3.
struct PathPolyFamily {
    int n;
    IntPoly phi_path;                 // phi(L(P_n))
    IntPoly phi_b;                    // phi(B_n)
    IntPoly phi_u;                    // phi(U_n)
    std::optional<IntPoly> phi_cycle; // phi(L(C_n)), n >= 3
};

PathPolyFamily path_family(int n); // n >= 0, recurrence-built (no determinants)

// Closed-form values at x = 4: (4n, 2n+1, n+1, 2+2(-1)^{n+1}). The cycle
// entry is formula-only for n < 3.
std::array<BigInt, 4> eval4_family(int n); // n >= 1

// Adjacency characteristic polynomial of P_n via phi(A(P_n)) =
// x phi(A(P_{n-1})) - phi(A(P_{n-2})), phi(A(P_0)) = 1. Defined for n >= 0.
IntPoly a_path_poly(int n);

} // namespace specgraph

#endif
