#ifndef SPECGRAPH_DS_VERIFY_HPP
#define SPECGRAPH_DS_VERIFY_HPP

#include "specgraph/charpoly.hpp"
#include "specgraph/degseq.hpp"
#include "specgraph/enumerate.hpp"
#include "specgraph/graph.hpp"
#include "specgraph/intpoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace specgraph {

inline constexpr int kDefaultDsCeiling = 9;

// Everything the chosen spectrum determines, derived from the characteristic
// polynomial alone so that cospectral graphs always get identical summaries.
struct SpectralSummary {
    MatrixKind kind = MatrixKind::L;
    int n = 0;
    BigInt m;
    std::optional<int> component_count;      // L only: multiplicity of 0
    std::optional<BigInt> spanning_trees;    // L only
    std::optional<int> bipartite_components; // Q only: multiplicity of 0
    std::vector<BigInt> spectral_moments;    // T_0 .. T_4
    IntPoly charpoly;
};

SpectralSummary summarize(const Graph& g, MatrixKind kind);
SpectralSummary summarize(const IntPoly& phi, MatrixKind kind);

// lambda_2(G) < 2, decided exactly: at most one adjacency root in [2, inf).
bool lambda2_below_2(const Graph& g);

struct MateSearchOptions {
    int ceiling = kDefaultDsCeiling;
    int jobs = 1;
    // restrict the sweep to these degree multisets (solver output)
    std::optional<std::vector<DegreeSequence>> restrict_degseq;
};

// All isomorphism classes with g's (n, m) whose kind-polynomial equals g's,
// excluding g's own class. The sweep is exhaustive over labeled graphs with
// sound cospectrality prunes (degree square sum for L/Q, triangle count for
// A) ahead of the exact polynomial comparison; results are sorted by
// certificate.
std::vector<Graph> mate_search(const Graph& g, MatrixKind kind,
                               const MateSearchOptions& options = {});

// Shared-sweep variant: one enumeration pass answers several cospectrality
// queries against graphs that all have the same (n, m).
struct MateTarget {
    MatrixKind kind;
    Graph graph;
};
std::vector<std::vector<Graph>> mate_search_batch(const std::vector<MateTarget>& targets,
                                                  const MateSearchOptions& options = {});

// Propellers of a given order, canonical p >= q, ordered by (q, p).
std::vector<PropellerParams> propellers_of_order(int n);

// No two distinct propellers of order n share a kind-polynomial.
bool propeller_pairwise_distinct(int n, MatrixKind kind);

struct DsReport {
    PropellerParams params;
    MatrixKind kind;
    int ceiling = kDefaultDsCeiling;
    SpectralSummary summary;
    // n >= 12 only: the solver's candidate sequences and the survivors of the
    // triangle-feasibility filter (the filter drives the restricted search;
    // below 12 the search is unrestricted and these mirror "no restriction")
    std::optional<DegSeqSolution> candidates;
    std::vector<DegreeSequence> filtered;
    std::vector<Graph> mates;
    std::vector<std::string> mates_graph6;
    // per mate, Q-mode only: whether it carries two vertex-disjoint cycles
    // (a found mate would have to violate the interlacing argument)
    std::vector<bool> mate_disjoint_cycle_flags;
    std::string verdict; // "DS-at-this-order" or "mate-found"
};

DsReport ds_verify(const PropellerParams& params, MatrixKind kind,
                   const MateSearchOptions& options = {});

// All connected isomorphism classes with largest adjacency eigenvalue
// exactly 2, up to order n_max. lambda_1 = 2 bounds the edge count by n and
// the maximum degree by 4, so only m in {n-1, n} is swept.
std::vector<Graph> smith_census(int n_max, const MateSearchOptions& options = {});

// The 15-vertex subcase of the Q-mode analysis: enumerate the 6-vertex
// companion graphs with degrees (4, 3^3, 2, 1), three triangles and no two
// vertex-disjoint cycles; pair the one matching `expected_factor` with P_9
// and work the generating identity of the resulting 15-vertex graph.
struct Case32Check {
    std::vector<Graph> companions;
    std::vector<IntPoly> companion_qpolys;
    std::optional<IntPoly> h5_qpoly;    // phi(Q(companion + P_9)) when found
    std::optional<LaurentPoly> f_q_h5;  // Laurent left side for that graph
    LaurentPoly f_l_664;                // f_L(6,6,4) for the contradiction
};
Case32Check case32_h5_check(const IntPoly& expected_factor);

} // namespace specgraph

#endif
