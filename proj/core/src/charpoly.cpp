#include "specgraph/charpoly.hpp"
#include "specgraph/roots.hpp"

#include <stdexcept>

namespace specgraph {

IntMatrix matrix_of(const Graph& g, MatrixKind kind) {
    const int n = g.order();
    IntMatrix m(n, std::vector<long>(n, 0));
    for (int u = 0; u < n; ++u) {
        for (int v : g.neighbors(u)) {
            switch (kind) {
                case MatrixKind::A: m[u][v] = 1; break;
                case MatrixKind::L: m[u][v] = -1; break;
                case MatrixKind::Q: m[u][v] = 1; break;
            }
        }
        if (kind != MatrixKind::A) m[u][u] = g.degree(u);
    }
    return m;
}

IntPoly charpoly(const IntMatrix& m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return IntPoly::constant(1);
    // Samuelson-Berkowitz: C_r = char poly of the leading r x r block,
    // stored leading coefficient first. Stage r convolves C_{r-1} with
    //   v = (1, -m_rr, -(R S), -(R M' S), -(R M'^2 S), ...)
    // where M' is the leading (r-1) block, R its last row slice and S the
    // last column slice.
    std::vector<BigInt> C{1, -m[0][0]};
    std::vector<BigInt> w, w2, v;
    for (int r = 2; r <= n; ++r) {
        const int k = r - 1;
        v.assign(r + 1, BigInt(0));
        v[0] = 1;
        v[1] = -m[k][k];
        w.assign(k, BigInt(0));
        for (int i = 0; i < k; ++i) w[i] = m[i][k];
        for (int j = 2; j <= r; ++j) {
            BigInt dot(0);
            for (int i = 0; i < k; ++i)
                if (m[k][i] != 0) {
                    if (m[k][i] == 1) dot += w[i];
                    else if (m[k][i] == -1) dot -= w[i];
                    else dot += w[i] * m[k][i];
                }
            v[j] = -dot;
            if (j < r) {
                w2.assign(k, BigInt(0));
                for (int i = 0; i < k; ++i) {
                    BigInt& acc = w2[i];
                    const auto& row = m[i];
                    for (int l = 0; l < k; ++l) {
                        if (row[l] == 0) continue;
                        if (row[l] == 1) acc += w[l];
                        else if (row[l] == -1) acc -= w[l];
                        else acc += w[l] * row[l];
                    }
                }
                w.swap(w2);
            }
        }
        std::vector<BigInt> next(r + 1, BigInt(0));
        for (int i = 0; i < static_cast<int>(C.size()); ++i) {
            if (C[i] == 0) continue;
            for (int j = 0; j <= r - i && j <= r; ++j)
                if (i + j <= r && v[j] != 0)
                    mpz_addmul(next[i + j].get_mpz_t(), C[i].get_mpz_t(), v[j].get_mpz_t());
        }
        C.swap(next);
    }
    std::vector<BigInt> ascending(C.rbegin(), C.rend());
    return IntPoly(std::move(ascending));
}

IntPoly charpoly(const Graph& g, MatrixKind kind) { return charpoly(matrix_of(g, kind)); }

IntPoly principal_minor_charpoly(const IntMatrix& m, const std::vector<int>& deleted) {
    const int n = static_cast<int>(m.size());
    std::vector<bool> drop(n, false);
    for (int v : deleted) {
        if (v < 0 || v >= n) throw std::invalid_argument("deleted index out of range");
        drop[v] = true;
    }
    std::vector<int> keep;
    for (int i = 0; i < n; ++i)
        if (!drop[i]) keep.push_back(i);
    IntMatrix sub(keep.size(), std::vector<long>(keep.size()));
    for (size_t i = 0; i < keep.size(); ++i)
        for (size_t j = 0; j < keep.size(); ++j) sub[i][j] = m[keep[i]][keep[j]];
    return charpoly(sub);
}

IntPoly principal_minor_charpoly(const Graph& g, MatrixKind kind, const std::vector<int>& deleted) {
    return principal_minor_charpoly(matrix_of(g, kind), deleted);
}

BigRat eval_at(const IntPoly& p, const BigRat& x) { return p.eval(x); }

// Smith graph constructions live here so the exact lambda_1 = 2 gate can use
// the charpoly and root-counting machinery.
Graph make_smith(const SmithKind& kind) {
    Graph g;
    switch (kind.tag) {
        case SmithKind::Tag::Cycle:
            g = make_cycle(kind.param);
            break;
        case SmithKind::Tag::W: {
            const int k = kind.param;
            if (k < 0) throw std::invalid_argument("W_k needs k >= 0");
            if (k == 0) {
                g = make_star(4);
                break;
            }
            // two P_3's, middles 1 and 4, joined by a path with k edges
            std::vector<Edge> e{{0, 1}, {1, 2}, {3, 4}, {4, 5}};
            int prev = 1, fresh = 6;
            for (int i = 0; i < k - 1; ++i) {
                e.emplace_back(prev, fresh);
                prev = fresh++;
            }
            e.emplace_back(prev, 4);
            g = Graph::from_edges(5 + k, std::move(e));
            break;
        }
        case SmithKind::Tag::S1:
            // spider with three legs of length two
            g = Graph::from_edges(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
            break;
        case SmithKind::Tag::S2:
            // P_7 with a pendant at its center
            g = Graph::from_edges(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {3, 7}});
            break;
        case SmithKind::Tag::S3:
            // P_8 with a pendant at the third vertex
            g = Graph::from_edges(9, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {2, 8}});
            break;
    }
    IntPoly phi = charpoly(g, MatrixKind::A);
    if (root_multiplicity(phi, BigRat(2)) == 0 || count_roots_greater(phi, BigRat(2), true) != 0 ||
        !is_connected(g))
        throw std::logic_error("Smith construction failed the exact lambda_1 = 2 test");
    return g;
}

} // namespace specgraph
