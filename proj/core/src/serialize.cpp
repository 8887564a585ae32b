#include "specgraph/serialize.hpp"

namespace specgraph {

Json graph_to_json(const Graph& g) {
    Json j;
    j["n"] = g.order();
    Json edges = Json::array();
    for (auto [u, v] : g.edges()) edges.push_back(Json::array({u, v}));
    j["edges"] = edges;
    return j;
}

Graph graph_from_json(const Json& j) {
    const int n = j.at("n").get<int>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    return Graph::from_edges(n, std::move(edges));
}

Json poly_to_json(const IntPoly& p) {
    Json arr = Json::array();
    for (int i = 0; i <= p.degree(); ++i) arr.push_back(p.coeff(i).get_str());
    return arr;
}

IntPoly poly_from_json(const Json& j) {
    std::vector<BigInt> c;
    for (const auto& v : j) c.emplace_back(v.get<std::string>());
    return IntPoly(std::move(c));
}

Json laurent_to_json(const LaurentPoly& p) {
    Json j = Json::object();
    for (const auto& [e, v] : p.terms()) j[std::to_string(e)] = v.get_str();
    return j;
}

Json identity_report_to_json(const IdentityReport& r) {
    Json j;
    j["identity"] = r.identity;
    j["params"] = r.params;
    j["equal"] = r.equal;
    if (r.first_mismatch_exponent) j["first_mismatch_exponent"] = *r.first_mismatch_exponent;
    return j;
}

Json summary_to_json(const SpectralSummary& s) {
    Json j;
    j["kind"] = to_string(s.kind);
    j["n"] = s.n;
    j["m"] = s.m.get_str();
    if (s.component_count) j["component_count"] = *s.component_count;
    if (s.spanning_trees) j["spanning_trees"] = s.spanning_trees->get_str();
    if (s.bipartite_components) j["bipartite_components"] = *s.bipartite_components;
    Json moments = Json::array();
    for (const auto& t : s.spectral_moments) moments.push_back(t.get_str());
    j["moments"] = moments;
    j["charpoly"] = poly_to_json(s.charpoly);
    return j;
}

Json structure_to_json(const StructureSummary& s) {
    Json j;
    j["components"] = s.components;
    j["triangle_count"] = s.triangle_count;
    j["c4_count"] = s.c4_count;
    j["degree_sequence"] = s.degree_sequence;
    j["degree_sequence_display"] = degree_sequence_display(s.degree_sequence);
    j["bipartite_component_count"] = s.bipartite_component_count;
    j["has_two_disjoint_cycles"] = s.has_two_disjoint_cycles;
    return j;
}

Json degseq_solution_to_json(const DegSeqSolution& s) {
    Json j;
    j["n"] = s.n;
    j["kind"] = to_string(s.kind);
    Json rows = Json::array();
    for (const auto& row : s.rows) {
        Json r;
        r["a"] = row.a;
        r["t1"] = row.t1;
        r["tn"] = row.tn;
        r["feasible"] = row.feasible();
        Json options = Json::array();
        for (const auto& opt : row.middle_options) options.push_back(middle_option_display(opt, s.n));
        r["middle_options"] = options;
        Json seqs = Json::array();
        for (const auto& d : row.sequences) seqs.push_back(degree_sequence_display(d));
        r["sequences"] = seqs;
        rows.push_back(std::move(r));
    }
    j["rows"] = rows;
    Json seqs = Json::array();
    for (const auto& d : s.sequences) {
        Json e;
        e["degrees"] = d;
        e["display"] = degree_sequence_display(d);
        seqs.push_back(std::move(e));
    }
    j["sequences"] = seqs;
    return j;
}

Json ds_report_to_json(const DsReport& r) {
    Json j;
    j["params"] = {{"p", r.params.p}, {"q", r.params.q}, {"k", r.params.k}};
    j["kind"] = to_string(r.kind);
    j["ceiling"] = r.ceiling;
    j["summary"] = summary_to_json(r.summary);
    if (r.candidates) {
        Json cands = Json::array();
        for (const auto& d : r.candidates->sequences) cands.push_back(degree_sequence_display(d));
        j["candidates"] = cands;
        Json filt = Json::array();
        for (const auto& d : r.filtered) filt.push_back(degree_sequence_display(d));
        j["filtered"] = filt;
    } else {
        j["candidates"] = "unrestricted";
        j["filtered"] = "unrestricted";
    }
    j["mates"] = r.mates_graph6;
    if (r.kind == MatrixKind::Q) {
        Json flags = Json::array();
        for (bool f : r.mate_disjoint_cycle_flags) flags.push_back(f);
        j["mate_disjoint_cycle_flags"] = flags;
    }
    j["verdict"] = r.verdict;
    return j;
}

} // namespace specgraph
