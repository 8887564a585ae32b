#include "specgraph/formulas.hpp"

#include <stdexcept>

namespace specgraph {

IdentityReport make_identity_report(std::string name, std::vector<long> params,
                                    LaurentPoly lhs, LaurentPoly rhs) {
    IdentityReport r;
    r.identity = std::move(name);
    r.params = std::move(params);
    r.first_mismatch_exponent = lhs.first_mismatch(rhs);
    r.equal = !r.first_mismatch_exponent.has_value();
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    return r;
}

// ---- closed forms -----------------------------------------------------------

IntPoly infinity_lpoly(int p, int q) {
    if (p < 3 || q < 3) throw std::invalid_argument("infinity graph cycle lengths must be >= 3");
    const int top = std::max(p, q);
    std::vector<IntPoly> u(top);
    for (int i = 0; i < top; ++i) u[i] = path_family(i).phi_u;
    const IntPoly xm4{-4, 1};
    IntPoly lhs = xm4 * u[p - 1] * u[q - 1];
    lhs = lhs - (u[q - 1] * (u[p - 2] + IntPoly::constant(alt_sign(p)))) * BigInt(2);
    lhs = lhs - (u[p - 1] * (u[q - 2] + IntPoly::constant(alt_sign(q)))) * BigInt(2);
    return lhs;
}

BigInt infinity_l_at4(int p, int q) {
    return BigInt(2L * (p + q) - 4L * p * q - 2L * (alt_sign(q) * p + alt_sign(p) * q));
}

IntPoly propeller_lpoly(const PropellerParams& params) {
    const int p = params.p, q = params.q, k = params.k;
    IntPoly gpq = infinity_lpoly(p, q);
    auto famk = path_family(k);
    IntPoly bk1 = path_family(k - 1).phi_b;
    IntPoly u_prod = path_family(p - 1).phi_u * path_family(q - 1).phi_u;
    return gpq * famk.phi_path - gpq * bk1 - famk.phi_path * u_prod;
}

BigInt propeller_l_at4(const PropellerParams& params) {
    const long p = params.p, q = params.q, k = params.k;
    return BigInt(2 * (2 * k + 1) * (p + q - alt_sign(q) * p - alt_sign(p) * q) -
                  4 * p * q * (3 * k + 1));
}

IntPoly propeller_apoly(const PropellerParams& params) {
    const int p = params.p, q = params.q, k = params.k;
    IntPoly ap1 = a_path_poly(p - 1), aq1 = a_path_poly(q - 1), ak = a_path_poly(k);
    IntPoly ap2 = a_path_poly(p - 2), aq2 = a_path_poly(q - 2), ak1 = a_path_poly(k - 1);
    IntPoly r = IntPoly::x() * ap1 * aq1 * ak;
    r = r - (ap2 * aq1 * ak) * BigInt(2);
    r = r - (ap1 * aq2 * ak) * BigInt(2);
    r = r - ap1 * aq1 * ak1;
    r = r - (ap1 * ak) * BigInt(2);
    r = r - (aq1 * ak) * BigInt(2);
    return r;
}

BigInt propeller_a_at2(const PropellerParams& params) {
    return BigInt(-(3L * params.k + 2) * params.p * params.q);
}

BigInt q_subleading_formula(const PropellerParams& params) {
    if (params.p % 2 != 0 || params.q % 2 != 0)
        throw std::invalid_argument("q_subleading_formula requires even cycle lengths");
    const long n = params.order();
    BigInt v = BigInt(params.p) * params.q * n;
    return (n - 1) % 2 == 0 ? v : -v;
}

// ---- generating identities --------------------------------------------------

LaurentPoly f_L(int p, int q, int k) {
    const long P = p, Q = q, K = k;
    LaurentPoly f;
    auto add = [&f](long c, long e) { f.add_term(BigInt(c), e); };
    add(2 * alt_sign(1 + Q), 2 * P + Q + 2 * K + 3);
    add(2 * alt_sign(1 + P), 2 * Q + P + 2 * K + 3);
    add(2 * alt_sign(Q), 2 * P + Q + 2 * K + 1);
    add(2 * alt_sign(P), P + 2 * Q + 2 * K + 1);
    add(3, 2 * P + 2 * Q + 1);
    add(3, 2 * P + 2 * Q);
    add(1, 2 * P + 3 + 2 * K);
    add(1, 2 * Q + 3 + 2 * K);
    add(3, 2 * P + 2 * K + 2);
    add(3, 2 * Q + 2 * K + 2);
    add(2, 2 * P + 1 + 2 * K);
    add(2, 2 * Q + 1 + 2 * K);
    add(2 * alt_sign(Q), 2 * P + 2 + Q);
    add(2 * alt_sign(P), 2 * Q + 2 + P);
    add(2 * alt_sign(1 + Q), 2 * P + Q);
    add(2 * alt_sign(1 + P), 2 * Q + P);
    add(2 * alt_sign(P), 3 + P + 2 * K);
    add(2 * alt_sign(Q), 3 + Q + 2 * K);
    add(2 * alt_sign(1 + P), P + 2 * K + 1);
    add(2 * alt_sign(1 + Q), Q + 2 * K + 1);
    add(-2, 2 * P + 2);
    add(-2, 2 * Q + 2);
    add(-3, 2 * P + 1);
    add(-3, 2 * Q + 1);
    add(-1, 2 * P);
    add(-1, 2 * Q);
    add(-3, 2 * K + 3);
    add(2 * alt_sign(1 + P), 2 + P);
    add(2 * alt_sign(1 + Q), 2 + Q);
    add(2 * alt_sign(P), P);
    add(2 * alt_sign(Q), Q);
    add(-3, 2 * K + 2);
    return f;
}

LaurentPoly f_A(int p, int q, int k) {
    const long P = p, Q = q, K = k;
    LaurentPoly f;
    auto add = [&f](long c, long e) { f.add_term(BigInt(c), e); };
    add(-2, 4 + 2 * K + P + 2 * Q);
    add(-2, 4 + 2 * K + Q + 2 * P);
    add(2, 2 * K + 2 + P + 2 * Q);
    add(2, 2 * K + 2 + Q + 2 * P);
    add(3, 2 * P + 2 * Q);
    add(2, 2 + P + 2 * Q);
    add(2, 2 + Q + 2 * P);
    add(-2, P + 2 * Q);
    add(-2, Q + 2 * P);
    add(-2, 2 + 2 * P);
    add(-2, 2 + 2 * Q);
    add(-1, 2 * P);
    add(-1, 2 * Q);
    add(1, 2 * K + 4 + 2 * P);
    add(1, 2 * K + 4 + 2 * Q);
    add(2, 2 * K + 2 + 2 * P);
    add(2, 2 * K + 2 + 2 * Q);
    add(2, 2 * K + 4 + P);
    add(2, 2 * K + 4 + Q);
    add(-2, 2 * K + 2 + P);
    add(-2, 2 * K + 2 + Q);
    add(-2, 2 + P);
    add(-2, 2 + Q);
    add(2, P);
    add(2, Q);
    add(-3, 2 * K + 4);
    return f;
}

namespace {

void check_identity_exponents(const LaurentPoly& f, long n) {
    // the generating identities never reach exponents beyond 2n+8
    const long bound = 2 * n + 8;
    if (f.is_zero()) return;
    if (*f.min_exponent() < -bound || *f.max_exponent() > bound)
        throw std::overflow_error("identity exponent exceeds the 2n+8 window");
}

} // namespace

LaurentPoly laurent_lhs_L(const IntPoly& phi) {
    const long n = phi.degree();
    LaurentPoly lhs = laurent_from_charpoly(phi, MatrixKind::L);
    // (y-1)^3 (y+1)^2 = y^5 - y^4 - 2y^3 + 2y^2 + y - 1
    lhs = lhs * LaurentPoly::from_int_poly(IntPoly{-1, 1, 2, -2, -1, 1});
    lhs.add_term(BigInt(1), 0);
    lhs.add_term(BigInt(-3), 1);
    lhs.add_term(BigInt(-4), 2);
    lhs.add_term(BigInt(4), 2 * n + 3);
    lhs.add_term(BigInt(3), 2 * n + 4);
    lhs.add_term(BigInt(-1), 2 * n + 5);
    return lhs;
}

LaurentPoly laurent_lhs_A(const IntPoly& phi) {
    const long n = phi.degree();
    LaurentPoly lhs = laurent_from_charpoly(phi, MatrixKind::A);
    // (y^2-1)^3
    lhs = lhs * LaurentPoly::from_int_poly(IntPoly{-1, 0, 3, 0, -3, 0, 1});
    lhs.add_term(BigInt(1), 0);
    lhs.add_term(BigInt(-4), 2);
    lhs.add_term(BigInt(-1), 2 * n + 6);
    lhs.add_term(BigInt(4), 2 * n + 4);
    return lhs;
}

IdentityReport verify_fL_identity(const PropellerParams& params) {
    const long n = params.order();
    LaurentPoly lhs = laurent_lhs_L(charpoly(make_propeller(params), MatrixKind::L));
    LaurentPoly rhs = f_L(params.p, params.q, params.k);
    check_identity_exponents(lhs, n);
    check_identity_exponents(rhs, n);
    return make_identity_report("fL", {params.p, params.q, params.k}, std::move(lhs), std::move(rhs));
}

IdentityReport verify_fA_identity(const PropellerParams& params) {
    const long n = params.order();
    LaurentPoly lhs = laurent_lhs_A(charpoly(make_propeller(params), MatrixKind::A));
    LaurentPoly rhs = f_A(params.p, params.q, params.k);
    check_identity_exponents(lhs, n);
    check_identity_exponents(rhs, n);
    return make_identity_report("fA", {params.p, params.q, params.k}, std::move(lhs), std::move(rhs));
}

IdentityReport verify_path_laurent_identity(const std::string& which, int n) {
    if (n < 1) throw std::invalid_argument("path Laurent identities need n >= 1");
    IntPoly phi;
    long gap = 1; // multiply by y^{n+gap} - y^n
    long top = 0; // right side is y^n (y^{top} - 1) (+ extra (y+1) factor for paths)
    bool path_extra = false;
    if (which == "path_L") {
        phi = path_family(n).phi_path;
        gap = 1;
        top = 2 * n;
        path_extra = true;
    } else if (which == "B") {
        phi = path_family(n).phi_b;
        gap = 1;
        top = 2 * n + 1;
    } else if (which == "U") {
        phi = path_family(n).phi_u;
        gap = 2;
        top = 2 * n + 2;
    } else if (which == "path_A") {
        phi = a_path_poly(n);
        gap = 2;
        top = 2 * n + 2;
    } else {
        throw std::invalid_argument("unknown path identity: " + which);
    }
    const MatrixKind kind = (which == "path_A") ? MatrixKind::A : MatrixKind::L;
    LaurentPoly lhs = laurent_from_charpoly(phi, kind);
    LaurentPoly mult = LaurentPoly::term(BigInt(1), n + gap) - LaurentPoly::term(BigInt(1), n);
    lhs = lhs * mult;
    LaurentPoly rhs = LaurentPoly::term(BigInt(1), top) - LaurentPoly::term(BigInt(1), 0);
    if (path_extra) rhs = rhs * (LaurentPoly::term(BigInt(1), 1) + LaurentPoly::term(BigInt(1), 0));
    rhs = rhs.shifted(n);
    return make_identity_report("laurent_" + which, {n}, std::move(lhs), std::move(rhs));
}

// ---- coefficient and moment formulas ----------------------------------------

std::array<BigInt, 4> l_coefficient_formulas(const Graph& g) {
    const BigInt m = g.size();
    auto d = degree_sequence(g);
    const BigInt s2(static_cast<long>(degree_power_sum(d, 2)));
    const BigInt s3(static_cast<long>(degree_power_sum(d, 3)));
    const BigInt n3(triangle_count(g));
    std::array<BigInt, 4> out;
    out[0] = 1;
    out[1] = -2 * m;
    BigInt twice_l2 = 4 * m * m - 2 * m - s2;
    out[2] = twice_l2 / 2;
    if (twice_l2 % 2 != 0) throw std::logic_error("l2 formula not integral");
    BigInt thrice_l3 = -4 * m * m * m + 6 * m * m + 3 * m * s2 - s3 - 3 * s2 + 6 * n3;
    out[3] = thrice_l3 / 3;
    if (thrice_l3 % 3 != 0) throw std::logic_error("l3 formula not integral");
    return out;
}

std::array<BigInt, 4> q_moment_formulas(const Graph& g) {
    auto d = degree_sequence(g);
    const BigInt m = g.size();
    const BigInt s2(static_cast<long>(degree_power_sum(d, 2)));
    const BigInt s3(static_cast<long>(degree_power_sum(d, 3)));
    const BigInt n3(triangle_count(g));
    return {BigInt(g.order()), 2 * m, 2 * m + s2, 6 * n3 + 3 * s2 + s3};
}

BigInt fourth_moment_formula(const Graph& g) {
    auto d = degree_sequence(g);
    BigInt walk(0);
    for (int deg : d) walk += BigInt(deg) + 4 * (BigInt(deg) * (deg - 1) / 2);
    return 8 * BigInt(c4_count(g)) + walk;
}

IntPoly tu_coefficients(const Graph& g) {
    const int n = g.order();
    if (n > 8) throw resource_error("TU-subgraph expansion capped at 8 vertices");
    const auto es = g.edges();
    const int m = static_cast<int>(es.size());
    std::vector<BigInt> coeff(n + 1, BigInt(0)); // coeff[j] = q_j
    coeff[0] = 1;

    std::vector<int> parent(n), compsize(n), compedges(n);
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        const int j = __builtin_popcount(mask);
        if (j == 0 || j > n) continue;
        for (int v = 0; v < n; ++v) {
            parent[v] = v;
            compsize[v] = 1;
            compedges[v] = 0;
        }
        auto find = [&](int a) {
            while (parent[a] != a) {
                parent[a] = parent[parent[a]];
                a = parent[a];
            }
            return a;
        };
        bool valid = true;
        for (int e = 0; e < m && valid; ++e) {
            if (!(mask >> e & 1u)) continue;
            int ra = find(es[e].first), rb = find(es[e].second);
            if (ra == rb) {
                if (++compedges[ra] > compsize[ra]) valid = false; // two cycles
            } else {
                parent[ra] = rb;
                compsize[rb] += compsize[ra];
                compedges[rb] += compedges[ra] + 1;
                if (compedges[rb] > compsize[rb]) valid = false;
            }
        }
        if (!valid) continue;
        // components are now trees (e = v-1) or unicyclic (e = v); odd cycle
        // test: a unicyclic component qualifies iff it is not bipartite
        BigInt weight(1);
        std::vector<int> color(n, -1);
        for (int r = 0; r < n && valid; ++r) {
            if (find(r) != r) continue;
            if (compedges[r] == compsize[r] - 1) {
                weight *= 1 + compedges[r];
            } else {
                // two-color the component over the chosen edges
                std::vector<int> stack{r};
                color[r] = 0;
                bool bip = true;
                while (!stack.empty()) {
                    int v = stack.back();
                    stack.pop_back();
                    for (int e = 0; e < m; ++e) {
                        if (!(mask >> e & 1u)) continue;
                        int a = es[e].first, b = es[e].second;
                        int w = -1;
                        if (a == v) w = b;
                        else if (b == v) w = a;
                        else continue;
                        if (color[w] < 0) {
                            color[w] = color[v] ^ 1;
                            stack.push_back(w);
                        } else if (color[w] == color[v]) {
                            bip = false;
                        }
                    }
                }
                if (bip) valid = false; // even cycle: not a TU-subgraph
                else weight *= 4;
            }
        }
        if (!valid) continue;
        if (j % 2 == 0) coeff[j] += weight;
        else coeff[j] -= weight;
    }
    // phi(Q) = x^n + q_1 x^{n-1} + ... + q_n
    std::vector<BigInt> ascending(n + 1);
    for (int j = 0; j <= n; ++j) ascending[n - j] = coeff[j];
    return IntPoly(std::move(ascending));
}

IntPoly lemma_edge_join_lpoly(const Graph& g1, int u, const Graph& g2, int v) {
    IntPoly p1 = charpoly(g1, MatrixKind::L);
    IntPoly p2 = charpoly(g2, MatrixKind::L);
    IntPoly p1u = principal_minor_charpoly(g1, MatrixKind::L, {u});
    IntPoly p2v = principal_minor_charpoly(g2, MatrixKind::L, {v});
    return p1 * p2 - p1 * p2v - p2 * p1u;
}

} // namespace specgraph
