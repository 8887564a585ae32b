#include "specgraph/enumerate.hpp"
#include "specgraph/canonical.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <unordered_set>

namespace specgraph {
namespace {

struct PairTable {
    std::vector<Edge> pairs; // lexicographic: (0,1),(0,2),...,(1,2),...
    explicit PairTable(int n) {
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    }
};

struct ScanState {
    int n;
    int m;
    const PairTable& table;
    std::vector<int> cap;
    std::optional<long long> max_sum_sq;

    std::vector<Edge> edges;
    std::vector<int> deg;
    long long sum_sq = 0;

    ScanState(int n_, int m_, const PairTable& t, const ScanOptions& opt)
        : n(n_), m(m_), table(t), max_sum_sq(opt.max_sum_deg_squares), deg(n_, 0) {
        cap = opt.degree_cap.empty() ? std::vector<int>(n_, std::max(0, n_ - 1)) : opt.degree_cap;
        edges.reserve(m_);
    }

    bool try_take(int t) {
        auto [u, v] = table.pairs[t];
        if (deg[u] >= cap[u] || deg[v] >= cap[v]) return false;
        sum_sq += 2LL * (deg[u] + deg[v]) + 2;
        ++deg[u];
        ++deg[v];
        edges.push_back(table.pairs[t]);
        return true;
    }

    void undo(int t) {
        auto [u, v] = table.pairs[t];
        edges.pop_back();
        --deg[u];
        --deg[v];
        sum_sq -= 2LL * (deg[u] + deg[v]) + 2;
    }

    bool prune(int t) const {
        const long long needed = m - static_cast<long long>(edges.size());
        if (needed > static_cast<long long>(table.pairs.size()) - t) return true;
        if (max_sum_sq && sum_sq + 2 * needed > *max_sum_sq) return true;
        return false;
    }
};

void scan_from(ScanState& st, int t, int slot,
               const std::function<void(int, const LeafView&)>& leaf) {
    if (static_cast<int>(st.edges.size()) == st.m) {
        leaf(slot, LeafView{st.n, st.edges, st.deg, st.sum_sq});
        return;
    }
    if (st.prune(t)) return;
    scan_from(st, t + 1, slot, leaf); // absent branch first: lexicographic order
    if (st.try_take(t)) {
        scan_from(st, t + 1, slot, leaf);
        st.undo(t);
    }
}

// Feasible decision prefixes over the first n-1 pairs (the vertex-0 row), in
// sequential traversal order. A prefix that already holds all m edges stands
// for the single leaf obtained by skipping every later pair.
void collect_prefixes(ScanState& st, int t, int prefix_len, std::vector<std::vector<Edge>>& out) {
    if (t == prefix_len || static_cast<int>(st.edges.size()) == st.m) {
        out.push_back(st.edges);
        return;
    }
    if (st.prune(t)) return;
    collect_prefixes(st, t + 1, prefix_len, out);
    if (st.try_take(t)) {
        collect_prefixes(st, t + 1, prefix_len, out);
        st.undo(t);
    }
}

std::vector<std::vector<Edge>> prefixes_for(int n, int m, const PairTable& table,
                                            const ScanOptions& options) {
    ScanState st(n, m, table, options);
    std::vector<std::vector<Edge>> out;
    collect_prefixes(st, 0, std::max(0, n - 1), out);
    return out;
}

void validate(int n, int m, const ScanOptions& options) {
    if (n > options.ceiling)
        throw resource_error("enumeration order " + std::to_string(n) + " exceeds ceiling " +
                             std::to_string(options.ceiling));
    if (n < 0 || m < 0 || static_cast<long long>(m) > static_cast<long long>(n) * (n - 1) / 2)
        throw std::invalid_argument("infeasible (n, m)");
}

} // namespace

int scan_labeled_graphs(int n, int m, const ScanOptions& options,
                        const std::function<void(int, const LeafView&)>& leaf) {
    validate(n, m, options);
    PairTable table(n);
    auto prefixes = prefixes_for(n, m, table, options);

    auto run_slot = [&](int slot) {
        ScanState st(n, m, table, options);
        int t = 0;
        for (const auto& e : prefixes[slot]) {
            while (table.pairs[t] != e) ++t;
            st.try_take(t++);
        }
        scan_from(st, std::max(0, n - 1), slot, leaf);
    };

    const int jobs = std::max(1, options.jobs);
    if (jobs == 1 || prefixes.size() <= 1) {
        for (size_t s = 0; s < prefixes.size(); ++s) run_slot(static_cast<int>(s));
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j)
            pool.emplace_back([&] {
                while (true) {
                    size_t s = next.fetch_add(1);
                    if (s >= prefixes.size()) return;
                    run_slot(static_cast<int>(s));
                }
            });
        for (auto& th : pool) th.join();
    }
    return static_cast<int>(prefixes.size());
}

std::vector<Graph> enumerate_graphs(int n, int m,
                                    const std::function<bool(const Graph&)>& filter,
                                    const ScanOptions& options) {
    validate(n, m, options);
    struct Candidate {
        std::string cert;
        Graph graph;
    };
    std::vector<std::vector<Candidate>> per_slot;
    {
        PairTable table(n);
        per_slot.resize(prefixes_for(n, m, table, options).size());
    }
    scan_labeled_graphs(n, m, options, [&](int slot, const LeafView& view) {
        Graph g = view.materialize();
        if (filter && !filter(g)) return;
        per_slot[slot].push_back({certificate(g), std::move(g)});
    });

    std::vector<Graph> out;
    std::unordered_set<std::string> seen;
    for (auto& bucket : per_slot)
        for (auto& cand : bucket)
            if (seen.insert(cand.cert).second) out.push_back(std::move(cand.graph));
    return out;
}

} // namespace specgraph
