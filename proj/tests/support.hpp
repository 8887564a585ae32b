#ifndef SPECGRAPH_TEST_SUPPORT_HPP
#define SPECGRAPH_TEST_SUPPORT_HPP

#include "specgraph/canonical.hpp"
#include "specgraph/graph.hpp"
#include "specgraph/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <unordered_set>
#include <vector>

namespace specgraph::test {

inline std::vector<int> random_perm(std::mt19937& rng, int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

inline Graph relabel(const Graph& g, const std::vector<int>& perm) {
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
    return Graph::from_edges(g.order(), std::move(edges));
}

inline Graph random_graph(std::mt19937& rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return Graph::from_edges(n, std::move(edges));
}

// random labeled tree from a Prufer sequence
inline Graph random_tree(std::mt19937& rng, int n) {
    if (n <= 1) return Graph::from_edges(n, {});
    if (n == 2) return Graph::from_edges(2, {{0, 1}});
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<int> prufer(n - 2);
    for (auto& v : prufer) v = pick(rng);
    std::vector<int> deg(n, 1);
    for (int v : prufer) ++deg[v];
    std::set<int> leaves;
    for (int v = 0; v < n; ++v)
        if (deg[v] == 1) leaves.insert(v);
    std::vector<Edge> edges;
    for (int v : prufer) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.emplace_back(std::min(leaf, v), std::max(leaf, v));
        if (--deg[v] == 1) leaves.insert(v);
    }
    int a = *leaves.begin(), b = *leaves.rbegin();
    edges.emplace_back(a, b);
    return Graph::from_edges(n, std::move(edges));
}

// independent oracle: every labeled graph with (n, m), partitioned by
// certificate
inline long labeled_class_count(int n, int m) {
    std::vector<Edge> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    const int P = static_cast<int>(pairs.size());
    std::unordered_set<std::string> classes;
    std::vector<int> idx(m);
    std::iota(idx.begin(), idx.end(), 0);
    if (m > P) return 0;
    while (true) {
        std::vector<Edge> edges;
        for (int i : idx) edges.push_back(pairs[i]);
        classes.insert(certificate(Graph::from_edges(n, std::move(edges))));
        int i = m - 1;
        while (i >= 0 && idx[i] == P - m + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
    }
    return static_cast<long>(classes.size());
}

// descending multisets of length n with entries in [lo, n-1], fixed sum and
// square sum: the brute-force route to the cospectral degree candidates
inline void descending_multisets(int slots, int lo, int hi, long sum, long sum_sq,
                                 std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (slots == 0) {
        if (sum == 0 && sum_sq == 0) out.push_back(cur);
        return;
    }
    for (int v = std::min<long>(hi, sum - lo * (slots - 1)); v >= lo; --v) {
        if (static_cast<long>(v) * v > sum_sq) continue;
        if (static_cast<long>(v) * slots < sum) break;
        cur.push_back(v);
        descending_multisets(slots - 1, lo, v, sum - v, sum_sq - static_cast<long>(v) * v, cur, out);
        cur.pop_back();
    }
}

inline std::vector<std::vector<int>> brute_force_degree_candidates(int n, MatrixKind kind) {
    // L-cospectral mates of a connected graph are connected (same component
    // count), so L-mode floors degrees at 1; Q allows isolated vertices
    const int lo = kind == MatrixKind::L ? 1 : 0;
    const long sum = 2L * (n + 1);
    const long sum_sq = 25 + 4L * (n - 2) + 1;
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    descending_multisets(n, lo, n - 1, sum, sum_sq, cur, out);
    return out;
}

// plain Jacobi sweep; plenty for 8x8 symmetric integer matrices
inline std::vector<double> jacobi_eigenvalues(std::vector<std::vector<double>> a) {
    const int n = static_cast<int>(a.size());
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += a[i][j] * a[i][j];
        if (off < 1e-24) break;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                if (std::abs(a[p][q]) < 1e-18) continue;
                const double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1));
                const double c = 1 / std::sqrt(t * t + 1), s = t * c;
                for (int k = 0; k < n; ++k) {
                    const double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
    }
    std::vector<double> eig(n);
    for (int i = 0; i < n; ++i) eig[i] = a[i][i];
    std::sort(eig.begin(), eig.end());
    return eig;
}

} // namespace specgraph::test

#endif
