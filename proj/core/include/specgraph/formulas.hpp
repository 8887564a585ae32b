#ifndef SPECGRAPH_FORMULAS_HPP
#define SPECGRAPH_FORMULAS_HPP

#include "specgraph/charpoly.hpp"
#include "specgraph/graph.hpp"
#include "specgraph/laurent.hpp"
#include "specgraph/path_family.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace specgraph {

// Result of checking one generating identity: both sides as Laurent
// polynomials plus the verdict.
struct IdentityReport {
    std::string identity;
    std::vector<long> params;
    LaurentPoly lhs;
    LaurentPoly rhs;
    bool equal = false;
    std::optional<long> first_mismatch_exponent;
};

IdentityReport make_identity_report(std::string name, std::vector<long> params,
                                    LaurentPoly lhs, LaurentPoly rhs);

// ---- closed forms for the infinity graph and the propeller ----------------

// phi(L(G_{p,q})) assembled from the U_n family:
// (x-4) U_{p-1} U_{q-1} - 2 U_{q-1} {U_{p-2} + (-1)^p} - 2 U_{p-1} {U_{q-2} + (-1)^q}
IntPoly infinity_lpoly(int p, int q);

// phi(L(G_{p,q}); 4) = 2(p+q) - 4pq - 2{(-1)^q p + (-1)^p q}
BigInt infinity_l_at4(int p, int q);

// phi(L(G)) for the propeller, via the edge-join composition:
// phi(L(G_{p,q})) phi(L(P_k)) - phi(L(G_{p,q})) phi(B_{k-1})
//   - phi(L(P_k)) phi(U_{p-1}) phi(U_{q-1})
IntPoly propeller_lpoly(const PropellerParams& params);

// phi(L(G); 4) = 2(2k+1){p+q-(-1)^q p-(-1)^p q} - 4pq(3k+1)
BigInt propeller_l_at4(const PropellerParams& params);

// phi(A(G)) via the vertex-deletion expansion at the hub.
IntPoly propeller_apoly(const PropellerParams& params);

// phi(A(G); 2) = -(3k+2) p q
BigInt propeller_a_at2(const PropellerParams& params);

// Coefficient of x in phi(Q(G)) for a propeller with p and q both even:
// (-1)^{n-1} p q n. With an odd cycle present, odd-unicyclic TU-subgraphs
// contribute as well and this closed form no longer applies.
BigInt q_subleading_formula(const PropellerParams& params);

// ---- generating identities in y --------------------------------------------

// The f_L(p,q,k;y) and f_A(p,q,k;y) expansions, transcribed term by term.
LaurentPoly f_L(int p, int q, int k);
LaurentPoly f_A(int p, int q, int k);

// Left sides of the generating identities for an arbitrary degree-n phi:
//   laurent_lhs_L: y^n (y-1)^3 (y+1)^2 phi + 1 - 3y - 4y^2 + 4y^{2n+3}
//                  + 3y^{2n+4} - y^{2n+5}   (L/Q substitution)
//   laurent_lhs_A: y^n (y^2-1)^3 phi + 1 - 4y^2 - y^{2n+6} + 4y^{2n+4}
LaurentPoly laurent_lhs_L(const IntPoly& phi);
LaurentPoly laurent_lhs_A(const IntPoly& phi);

// y^n (y-1)^3 (y+1)^2 phi(L(G)) + 1 - 3y - 4y^2 + 4y^{2n+3} + 3y^{2n+4} - y^{2n+5}
// == f_L(p,q,k;y), with phi computed by the determinant engine.
IdentityReport verify_fL_identity(const PropellerParams& params);

// y^n (y^2-1)^3 phi(A(G)) + 1 - 4y^2 - y^{2n+6} + 4y^{2n+4} == f_A(p,q,k;y)
IdentityReport verify_fA_identity(const PropellerParams& params);

// Laurent closed forms of the path family (all exact identities):
//   phi(L(P_n)) (y^{n+1}-y^n) == y^n (y+1)(y^{2n}-1)
//   phi(B_n)    (y^{n+1}-y^n) == y^n (y^{2n+1}-1)
//   phi(U_n)    (y^{n+2}-y^n) == y^n (y^{2n+2}-1)
//   phi(A(P_n)) (y^{n+2}-y^n) == y^n (y^{2n+2}-1)
// where the left side goes through laurent_from_charpoly.
IdentityReport verify_path_laurent_identity(const std::string& which, int n);

// ---- coefficient and moment formulas ---------------------------------------

// First four coefficients of phi(L(G)) from n, m, degree power sums and the
// triangle count. l_3 is absent for graphs with fewer than 3 vertices.
std::array<BigInt, 4> l_coefficient_formulas(const Graph& g);

// Q-spectral moments T_0..T_3 from degrees and triangles.
std::array<BigInt, 4> q_moment_formulas(const Graph& g);

// trace A^4 = 8 n_4(G) + sum_k k x_k + 4 sum_{k>=2} C(k,2) x_k
BigInt fourth_moment_formula(const Graph& g);

// phi(Q(G)) reconstructed from TU-subgraph weights (Lemma-style expansion
// over spanning subgraphs whose components are trees or odd-unicyclic).
// Exponential in the edge count; guarded at order 8.
IntPoly tu_coefficients(const Graph& g);

// Edge-join composition: G = G1 + G2 plus an edge between u in G1 and
// v in G2; phi(L(G)) = phi(L(G1))phi(L(G2)) - phi(L(G1))phi(L_v(G2))
//   - phi(L(G2))phi(L_u(G1)).
IntPoly lemma_edge_join_lpoly(const Graph& g1, int u, const Graph& g2, int v);

} // namespace specgraph

#endif
