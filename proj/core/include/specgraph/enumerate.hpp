#ifndef SPECGRAPH_ENUMERATE_HPP
#define SPECGRAPH_ENUMERATE_HPP

#include "specgraph/graph.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace specgraph {

inline constexpr int kDefaultEnumerationCeiling = 11;

// One complete labeled graph reached by the scan. Degrees and the degree
// square sum are maintained incrementally by the scanner.
struct LeafView {
    int n;
    const std::vector<Edge>& edges;
    const std::vector<int>& degrees;
    long long sum_deg_squares;

    Graph materialize() const { return Graph::from_edges(n, edges); }
};

struct ScanOptions {
    int ceiling = kDefaultEnumerationCeiling;
    int jobs = 1;
    // per-vertex degree caps; empty means n-1 everywhere
    std::vector<int> degree_cap;
    // subtree prune: completions only ever increase the degree square sum
    std::optional<long long> max_sum_deg_squares;
};

// Visits every labeled simple graph with n vertices and m edges exactly once.
// The traversal decides vertex pairs in lexicographic order; work is
// partitioned by the adjacency prefix of vertex 0 so that runs are
// order-deterministic for any job count: the scanner reports the prefix slot
// with each leaf, and slots are in ascending traversal order. Returns the
// number of slots.
int scan_labeled_graphs(int n, int m, const ScanOptions& options,
                        const std::function<void(int slot, const LeafView&)>& leaf);

// Exactly one representative per isomorphism class with n vertices and
// m edges satisfying `filter` (which must be isomorphism-invariant), in a
// deterministic order. The representative is the traversal-first labeled
// graph of its class.
std::vector<Graph> enumerate_graphs(int n, int m,
                                    const std::function<bool(const Graph&)>& filter = nullptr,
                                    const ScanOptions& options = {});

} // namespace specgraph

#endif
