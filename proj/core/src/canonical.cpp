#include "specgraph/canonical.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace specgraph {
namespace {

constexpr int kMaxCanonOrder = 64;

struct Refiner {
    int n;
    std::array<uint64_t, kMaxCanonOrder> adj{}; // adjacency bitmask rows

    // refine colors to a stable partition: a vertex signature is its color
    // plus the sorted multiset of neighbor colors
    void refine(std::vector<int>& color) const {
        std::vector<std::pair<std::vector<int>, int>> sig(n);
        std::vector<int> order(n);
        while (true) {
            for (int v = 0; v < n; ++v) {
                auto& s = sig[v].first;
                s.clear();
                s.push_back(color[v]);
                uint64_t row = adj[v];
                while (row) {
                    int w = __builtin_ctzll(row);
                    row &= row - 1;
                    s.push_back(color[w]);
                }
                std::sort(s.begin() + 1, s.end());
                sig[v].second = v;
            }
            for (int v = 0; v < n; ++v) order[v] = v;
            std::sort(order.begin(), order.end(), [&](int a, int b) { return sig[a].first < sig[b].first; });
            std::vector<int> next(n);
            int c = 0;
            for (int i = 0; i < n; ++i) {
                if (i > 0 && sig[order[i]].first != sig[order[i - 1]].first) ++c;
                next[order[i]] = c;
            }
            if (next == color) return;
            color = std::move(next);
        }
    }

    // index of first smallest color class with >= 2 members, or -1 if discrete
    int target_class(const std::vector<int>& color) const {
        int classes = *std::max_element(color.begin(), color.end()) + 1;
        std::vector<int> size(classes, 0);
        for (int v = 0; v < n; ++v) ++size[color[v]];
        int best = -1;
        for (int c = 0; c < classes; ++c)
            if (size[c] >= 2 && (best < 0 || size[c] < size[best])) best = c;
        return best;
    }

    // canonical byte string of the adjacency matrix under the discrete coloring
    std::string emit(const std::vector<int>& color) const {
        std::vector<int> pos(n); // canonical index -> vertex
        for (int v = 0; v < n; ++v) pos[color[v]] = v;
        std::string out;
        out.push_back(static_cast<char>(n));
        int bit = 7;
        unsigned char cur = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                if (adj[pos[i]] >> pos[j] & 1ull) cur |= 1u << bit;
                if (bit == 0) {
                    out.push_back(static_cast<char>(cur));
                    cur = 0;
                    bit = 7;
                } else {
                    --bit;
                }
            }
        if (bit != 7) out.push_back(static_cast<char>(cur));
        return out;
    }

    void search(std::vector<int> color, std::string& best, std::vector<int>& best_color) const {
        refine(color);
        int cls = target_class(color);
        if (cls < 0) {
            std::string cand = emit(color);
            if (best.empty() || cand < best) {
                best = std::move(cand);
                best_color = std::move(color);
            }
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (color[v] != cls) continue;
            std::vector<int> branched(color);
            // individualize v: shift everything at or above its class up
            for (int w = 0; w < n; ++w)
                if (branched[w] >= cls && w != v) ++branched[w];
            search(std::move(branched), best, best_color);
        }
    }
};

} // namespace

CanonicalForm canonicalize(const Graph& g) {
    const int n = g.order();
    if (n > kMaxCanonOrder) throw resource_error("canonical form capped at 64 vertices");
    Refiner r;
    r.n = n;
    for (int v = 0; v < n; ++v)
        for (int w : g.neighbors(v)) r.adj[v] |= 1ull << w;

    std::vector<int> color(n, 0);
    std::string best;
    std::vector<int> best_color;
    if (n == 0) {
        best.push_back(0);
        return {best, {}};
    }
    r.search(std::move(color), best, best_color);
    return {best, best_color};
}

std::string certificate(const Graph& g) { return canonicalize(g).certificate; }

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    return certificate(a) == certificate(b);
}

} // namespace specgraph
