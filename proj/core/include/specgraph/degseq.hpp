#ifndef SPECGRAPH_DEGSEQ_HPP
#define SPECGRAPH_DEGSEQ_HPP

#include "specgraph/graph.hpp"
#include "specgraph/laurent.hpp" // MatrixKind

#include <optional>
#include <string>
#include <vector>

namespace specgraph {

// One row of the perturbation case analysis: discriminant case a, hub and
// pendant perturbations t_1 / t_n, and every admissible multiset of nonzero
// middle perturbations. A row with no options is infeasible.
struct DegSeqCaseRow {
    int a;
    int t1;
    int tn;
    std::vector<std::vector<int>> middle_options; // sorted descending, nonzero entries
    std::vector<DegreeSequence> sequences;        // one per option
    bool feasible() const { return !middle_options.empty(); }
};

struct DegSeqSolution {
    int n;
    MatrixKind kind;
    std::vector<DegSeqCaseRow> rows;
    std::vector<DegreeSequence> sequences; // deduplicated degree multisets
};

// Exact solution set of the cospectral degree-perturbation system
//   sum t_i = 0,  sum (t_i^2 + 2 d_i t_i) = 0
// against the propeller base sequence (5, 2^{n-2}, 1), under the L-mode
// bounds (minimum degree 1: t_1 >= -4, middle >= -1, t_n >= 0) or the Q-mode
// bounds (degree 0 allowed: t_1 >= -5, middle >= -2, t_n >= -1). The solver
// follows the a in {0, 5, 8, 9} case split with t_1 = -3 +- sqrt(9 - a).
// Requires n >= 12 so every tabulated middle pattern fits.
DegSeqSolution candidate_degree_sequences(const DegreeSequence& base, MatrixKind kind);

// Triangle count forced on a cospectral mate with the given degree sequence:
//   L-mode: 6 n3(G) - sum d_G^3 = 6 n3(H) - sum d_H^3
//   Q-mode: 6 n3(G) + sum d_G^3 = 6 n3(H) + sum d_H^3
// where G has the propeller base sequence of the same length. Returns
// nothing when the difference is not divisible by 6; a negative value marks
// the candidate impossible.
std::optional<long> triangle_feasibility(long base_n3, const DegreeSequence& candidate,
                                         MatrixKind kind);

// exponent display against the base length, e.g. (2^1, -1^1, 0^{n-4}) with n
// substituted
std::string middle_option_display(const std::vector<int>& option, int n);

DegreeSequence propeller_base_sequence(int n); // (5, 2^{n-2}, 1)

} // namespace specgraph

#endif
