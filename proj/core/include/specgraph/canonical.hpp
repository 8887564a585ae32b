#ifndef SPECGRAPH_CANONICAL_HPP
#define SPECGRAPH_CANONICAL_HPP

#include "specgraph/graph.hpp"

#include <string>
#include <vector>

namespace specgraph {

// Canonical form of a graph: two graphs are isomorphic iff their
// certificates are byte-identical. The labeling maps original vertices to
// canonical positions. Implementation is iterated neighborhood refinement
// with backtracking over the vertices of the first smallest non-singleton
// color class; adequate for the small orders this project enumerates.
struct CanonicalForm {
    std::string certificate;    // n followed by packed canonical adjacency bits
    std::vector<int> labeling;  // labeling[v] = canonical index of v
};

CanonicalForm canonicalize(const Graph& g); // requires order <= 64

std::string certificate(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

} // namespace specgraph

#endif
