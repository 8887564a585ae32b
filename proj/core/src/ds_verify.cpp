#include "specgraph/ds_verify.hpp"
#include "specgraph/canonical.hpp"
#include "specgraph/formulas.hpp"
#include "specgraph/roots.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

namespace specgraph {

SpectralSummary summarize(const Graph& g, MatrixKind kind) {
    return summarize(charpoly(g, kind), kind);
}

SpectralSummary summarize(const IntPoly& phi, MatrixKind kind) {
    SpectralSummary s;
    s.kind = kind;
    s.n = phi.degree();
    for (int k = 0; k <= kMaxMomentOrder; ++k) s.spectral_moments.push_back(moments(phi, k));
    switch (kind) {
        case MatrixKind::A: s.m = -phi.coeff(s.n - 2); break;
        case MatrixKind::L: s.m = -phi.coeff(s.n - 1) / 2; break;
        case MatrixKind::Q: s.m = s.spectral_moments[1] / 2; break;
    }
    if (kind == MatrixKind::L) {
        const int zeros = zero_multiplicity(phi);
        s.component_count = zeros;
        if (zeros == 1 && s.n > 0) {
            BigInt prod = abs(phi.coeff(1));
            if (prod % s.n != 0) throw std::logic_error("matrix-tree coefficient not divisible by n");
            s.spanning_trees = prod / s.n;
        } else {
            s.spanning_trees = BigInt(zeros == 0 && s.n == 1 ? 1 : 0);
        }
    }
    if (kind == MatrixKind::Q) s.bipartite_components = zero_multiplicity(phi);
    s.charpoly = phi;
    return s;
}

bool lambda2_below_2(const Graph& g) {
    return count_roots_greater(charpoly(g, MatrixKind::A), BigRat(2), false) <= 1;
}

// ---- mate search ------------------------------------------------------------

namespace {

long long triangle_invariant(MatrixKind kind, long n3, long long cubes) {
    // forced equal between cospectral graphs once (n, m, sum d^2) agree:
    // via l_3 for L, T_3 for Q, and the triangle trace directly for A
    switch (kind) {
        case MatrixKind::L: return 6 * n3 - cubes;
        case MatrixKind::Q: return 6 * n3 + cubes;
        case MatrixKind::A: return n3;
    }
    return 0;
}

} // namespace

std::vector<std::vector<Graph>> mate_search_batch(const std::vector<MateTarget>& targets,
                                                  const MateSearchOptions& options) {
    if (targets.empty()) return {};
    const int n = targets[0].graph.order();
    const int m = targets[0].graph.size();
    for (const auto& t : targets)
        if (t.graph.order() != n || t.graph.size() != m)
            throw std::invalid_argument("batched mate queries must share (n, m)");
    if (n > options.ceiling)
        throw resource_error("mate search order " + std::to_string(n) + " exceeds ceiling " +
                             std::to_string(options.ceiling));

    struct QueryState {
        MatrixKind kind;
        IntPoly phi;
        std::string cert;
        long long sum_sq = 0;
        long long tri_inv = 0;
    };
    std::vector<QueryState> queries;
    bool all_lq = true;
    long long max_sum_sq = 0;
    for (const auto& t : targets) {
        QueryState q;
        q.kind = t.kind;
        q.phi = charpoly(t.graph, t.kind);
        q.cert = certificate(t.graph);
        auto d = degree_sequence(t.graph);
        q.sum_sq = degree_power_sum(d, 2);
        q.tri_inv = triangle_invariant(t.kind, triangle_count(t.graph), degree_power_sum(d, 3));
        max_sum_sq = std::max(max_sum_sq, q.sum_sq);
        if (t.kind == MatrixKind::A) all_lq = false;
        queries.push_back(std::move(q));
    }

    std::optional<std::set<DegreeSequence>> restrict;
    if (options.restrict_degseq)
        restrict.emplace(options.restrict_degseq->begin(), options.restrict_degseq->end());

    ScanOptions scan;
    scan.ceiling = std::max(options.ceiling, kDefaultEnumerationCeiling);
    scan.jobs = options.jobs;
    // edges only ever grow the degree square sum, so the largest L/Q target
    // bounds every subtree; unusable when an A-query imposes no degree data
    if (all_lq) scan.max_sum_deg_squares = max_sum_sq;

    struct Hit {
        size_t query;
        std::string cert;
        Graph graph;
    };
    std::vector<Hit> hits;
    std::mutex hits_mutex;

    scan_labeled_graphs(n, m, scan, [&](int, const LeafView& view) {
        bool any_sum = !all_lq;
        for (const auto& q : queries)
            if (q.kind == MatrixKind::A || q.sum_sq == view.sum_deg_squares) {
                any_sum = true;
                break;
            }
        if (!any_sum) return;

        Graph h = view.materialize();
        if (restrict) {
            DegreeSequence d = view.degrees;
            std::sort(d.rbegin(), d.rend());
            if (!restrict->count(d)) return;
        }
        long long cubes = 0;
        for (int dv : view.degrees) cubes += static_cast<long long>(dv) * dv * dv;
        const long n3 = triangle_count(h);

        IntPoly phi_by_kind[3];
        bool phi_ready[3] = {false, false, false};
        for (size_t qi = 0; qi < queries.size(); ++qi) {
            const auto& q = queries[qi];
            if (q.kind != MatrixKind::A && q.sum_sq != view.sum_deg_squares) continue;
            if (q.tri_inv != triangle_invariant(q.kind, n3, cubes)) continue;
            const int ki = static_cast<int>(q.kind);
            if (!phi_ready[ki]) {
                phi_by_kind[ki] = charpoly(h, q.kind);
                phi_ready[ki] = true;
            }
            if (phi_by_kind[ki] != q.phi) continue;
            std::string cert = certificate(h);
            if (cert == q.cert) continue; // the query's own isomorphism class
            std::lock_guard<std::mutex> lock(hits_mutex);
            hits.push_back({qi, std::move(cert), h});
        }
    });

    std::vector<std::vector<Graph>> out(queries.size());
    for (size_t qi = 0; qi < queries.size(); ++qi) {
        std::map<std::string, Graph> unique;
        for (auto& hit : hits)
            if (hit.query == qi) unique.emplace(hit.cert, hit.graph);
        for (auto& [cert, g] : unique) out[qi].push_back(std::move(g));
    }
    return out;
}

std::vector<Graph> mate_search(const Graph& g, MatrixKind kind, const MateSearchOptions& options) {
    return mate_search_batch({{kind, g}}, options)[0];
}

// ---- propeller sweeps --------------------------------------------------------

std::vector<PropellerParams> propellers_of_order(int n) {
    std::vector<PropellerParams> out;
    for (int q = 3; 2 * q + 1 <= n + 1; ++q)
        for (int p = q; p + q + 1 <= n + 1; ++p) {
            const int k = n + 1 - p - q;
            if (k >= 1) out.emplace_back(p, q, k);
        }
    return out;
}

bool propeller_pairwise_distinct(int n, MatrixKind kind) {
    if (n < 6) throw std::invalid_argument("no propellers below order 6");
    std::set<std::vector<BigInt>> seen;
    for (const auto& params : propellers_of_order(n)) {
        IntPoly phi = charpoly(make_propeller(params), kind);
        if (!seen.insert(phi.coeffs()).second) return false;
    }
    return true;
}

// ---- DS pipeline --------------------------------------------------------------

DsReport ds_verify(const PropellerParams& params, MatrixKind kind,
                   const MateSearchOptions& options) {
    const int n = params.order();
    if (n > options.ceiling)
        throw resource_error("ds_verify order " + std::to_string(n) + " exceeds ceiling " +
                             std::to_string(options.ceiling));
    Graph g = make_propeller(params);
    DsReport report{params, kind, options.ceiling, summarize(g, kind), std::nullopt, {}, {}, {}, {}, ""};

    MateSearchOptions search = options;
    if (n >= 12) {
        // the paper's route: solve the degree-sequence system, drop candidates
        // whose forced triangle count is impossible, then search within them
        report.candidates = candidate_degree_sequences(propeller_base_sequence(n), kind);
        const long base_n3 = (params.p == 3) + (params.q == 3);
        for (const auto& cand : report.candidates->sequences) {
            auto n3h = triangle_feasibility(base_n3, cand, kind);
            if (n3h && *n3h >= 0) report.filtered.push_back(cand);
        }
        search.restrict_degseq = report.filtered;
    }
    report.mates = mate_search(g, kind, search);
    for (const auto& mate : report.mates) {
        report.mates_graph6.push_back(to_graph6(mate));
        if (kind == MatrixKind::Q)
            report.mate_disjoint_cycle_flags.push_back(has_two_disjoint_cycles(mate));
    }
    report.verdict = report.mates.empty() ? "DS-at-this-order" : "mate-found";
    return report;
}

// ---- Smith census ---------------------------------------------------------------

std::vector<Graph> smith_census(int n_max, const MateSearchOptions& options) {
    if (n_max > options.ceiling)
        throw resource_error("smith census order " + std::to_string(n_max) + " exceeds ceiling " +
                             std::to_string(options.ceiling));
    std::vector<Graph> out;
    for (int n = 3; n <= n_max; ++n) {
        std::map<std::string, Graph> classes;
        std::mutex mu;
        // lambda_1 = 2 forces mean degree <= 2 (m <= n), max degree <= 4
        // (a K_{1,5} subgraph alone pushes lambda_1 past 2) and
        // sum d^2 <= 4n (Hofmeister's bound lambda_1^2 >= sum d^2 / n)
        for (int m = n - 1; m <= n; ++m) {
            ScanOptions scan;
            scan.ceiling = std::max(n_max, kDefaultEnumerationCeiling);
            scan.jobs = options.jobs;
            scan.degree_cap.assign(n, 4);
            scan.max_sum_deg_squares = 4LL * n;
            scan_labeled_graphs(n, m, scan, [&](int, const LeafView& view) {
                Graph h = view.materialize();
                if (!is_connected(h)) return;
                std::string cert = certificate(h);
                std::lock_guard<std::mutex> lock(mu);
                classes.emplace(std::move(cert), std::move(h));
            });
        }
        for (auto& [cert, h] : classes) {
            IntPoly phi = charpoly(h, MatrixKind::A);
            if (root_multiplicity(phi, BigRat(2)) >= 1 &&
                count_roots_greater(phi, BigRat(2), true) == 0)
                out.push_back(std::move(h));
        }
    }
    return out;
}

// ---- the 15-vertex Q-mode subcase ----------------------------------------------

Case32Check case32_h5_check(const IntPoly& expected_factor) {
    Case32Check check;
    const DegreeSequence target{4, 3, 3, 3, 2, 1};
    std::map<std::string, Graph> classes;
    ScanOptions scan;
    scan.max_sum_deg_squares = degree_power_sum(target, 2);
    scan_labeled_graphs(6, 8, scan, [&](int, const LeafView& view) {
        DegreeSequence d = view.degrees;
        std::sort(d.rbegin(), d.rend());
        if (d != target) return;
        Graph h = view.materialize();
        if (triangle_count(h) != 3) return;
        if (has_two_disjoint_cycles(h)) return;
        classes.emplace(certificate(h), std::move(h));
    });
    for (auto& [cert, h] : classes) {
        check.companions.push_back(h);
        check.companion_qpolys.push_back(charpoly(h, MatrixKind::Q));
    }
    for (size_t i = 0; i < check.companions.size(); ++i) {
        if (check.companion_qpolys[i] != expected_factor) continue;
        Graph h5 = disjoint_union(check.companions[i], make_path(9));
        check.h5_qpoly = charpoly(h5, MatrixKind::Q);
        check.f_q_h5 = laurent_lhs_L(*check.h5_qpoly);
        break;
    }
    check.f_l_664 = f_L(6, 6, 4);
    return check;
}

} // namespace specgraph
