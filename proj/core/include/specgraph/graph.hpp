#ifndef SPECGRAPH_GRAPH_HPP
#define SPECGRAPH_GRAPH_HPP

#include "specgraph/numeric.hpp"

#include <vector>
#include <string>
#include <utility>

namespace specgraph {

using Edge = std::pair<int, int>;

// Undirected simple graph on vertices {0..n-1}. Adjacency is kept as sorted
// neighbor lists; a Graph is an immutable value once built, so instances can
// be shared freely between threads.
class Graph {
public:
    Graph() = default;
    static Graph from_edges(int n, std::vector<Edge> edges);

    int order() const { return n_; }
    int size() const { return m_; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    bool has_edge(int u, int v) const;
    std::vector<Edge> edges() const; // lexicographically sorted, u < v

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;
};

// ---- parameter types -------------------------------------------------------

// Parameters of a propeller graph: cycles C_p and C_q sharing one vertex,
// with a k-vertex path attached at that vertex. Canonical form keeps p >= q.
struct PropellerParams {
    int p;
    int q;
    int k;

    PropellerParams(int p_, int q_, int k_);
    int order() const { return p + q + k - 1; }
    bool operator==(const PropellerParams& o) const = default;
};

struct SmithKind {
    enum class Tag { Cycle, W, S1, S2, S3 };
    Tag tag;
    int param = 0; // cycle length, or path length for W

    static SmithKind cycle(int n) { return {Tag::Cycle, n}; }
    static SmithKind w(int k) { return {Tag::W, k}; }
    static SmithKind s1() { return {Tag::S1, 0}; }
    static SmithKind s2() { return {Tag::S2, 0}; }
    static SmithKind s3() { return {Tag::S3, 0}; }
};

// ---- graph families --------------------------------------------------------

Graph make_path(int n);                   // P_n, n >= 1
Graph make_cycle(int n);                  // C_n, n >= 3
Graph make_star(int leaves);              // K_{1,leaves}
Graph make_complete(int n);

// Two cycles C_p, C_q with exactly one common vertex (vertex 0).
Graph make_infinity(int p, int q);

// Infinity graph plus a k-vertex path attached at the degree-4 vertex.
// Labeling: hub 0, first cycle 1..p-1, second cycle p..p+q-2,
// path p+q-1..n-1.
Graph make_propeller(const PropellerParams& params);

// Connected graph with largest adjacency eigenvalue exactly 2; the
// construction is verified by an exact root test.
Graph make_smith(const SmithKind& kind);

Graph disjoint_union(const Graph& a, const Graph& b);

// ---- transforms ------------------------------------------------------------

Graph line_graph(const Graph& g);        // vertices = edges of g (lex order)
Graph subdivision(const Graph& g);       // every edge replaced by a 2-path

// ---- structure -------------------------------------------------------------

using DegreeSequence = std::vector<int>; // sorted descending

struct StructureSummary {
    int components = 0;
    long triangle_count = 0;       // vertex triples inducing C_3 as a subgraph
    long c4_count = 0;             // 4-subsets carrying a C_4 subgraph
    DegreeSequence degree_sequence;
    int bipartite_component_count = 0;
    bool has_two_disjoint_cycles = false;
};

StructureSummary structure_summary(const Graph& g);

int component_count(const Graph& g);
bool is_connected(const Graph& g);
long triangle_count(const Graph& g);
long c4_count(const Graph& g);
int bipartite_component_count(const Graph& g);
bool has_two_disjoint_cycles(const Graph& g); // exact; order capped at 25

DegreeSequence degree_sequence(const Graph& g);
// exponent display, e.g. (5, 2^10, 1)
std::string degree_sequence_display(const DegreeSequence& d);
long long degree_power_sum(const DegreeSequence& d, int power);

// Number of spanning trees via the Matrix-Tree theorem: an exact integer
// cofactor of the Laplacian. Zero for disconnected graphs.
BigInt spanning_tree_count(const Graph& g);

// ---- serialization ---------------------------------------------------------

std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& s);

} // namespace specgraph

#endif
