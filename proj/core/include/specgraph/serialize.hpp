#ifndef SPECGRAPH_SERIALIZE_HPP
#define SPECGRAPH_SERIALIZE_HPP

#include "specgraph/degseq.hpp"
#include "specgraph/ds_verify.hpp"
#include "specgraph/formulas.hpp"
#include "specgraph/graph.hpp"
#include "specgraph/intpoly.hpp"

#include <json.hpp>

namespace specgraph {

// insertion-ordered JSON keeps every emission byte-stable
using Json = nlohmann::ordered_json;

Json graph_to_json(const Graph& g);          // {n, edges:[[u,v],...]}
Graph graph_from_json(const Json& j);

// array of decimal coefficient strings, constant term first
Json poly_to_json(const IntPoly& p);
IntPoly poly_from_json(const Json& j);

Json laurent_to_json(const LaurentPoly& p);  // {exponent: coefficient string}

Json identity_report_to_json(const IdentityReport& r);
Json summary_to_json(const SpectralSummary& s);
Json structure_to_json(const StructureSummary& s);
Json degseq_solution_to_json(const DegSeqSolution& s);
Json ds_report_to_json(const DsReport& r);

} // namespace specgraph

#endif
