#include "specgraph/path_family.hpp"

#include <stdexcept>
#include <vector>

namespace specgraph {
namespace {

// phi(L(P_0)) .. phi(L(P_{top}))
std::vector<IntPoly> path_polys_up_to(int top) {
    std::vector<IntPoly> p(top + 1);
    p[0] = IntPoly::zero();
    if (top >= 1) p[1] = IntPoly::x();
    const IntPoly xm2{-2, 1};
    for (int i = 2; i <= top; ++i) p[i] = xm2 * p[i - 1] - p[i - 2];
    return p;
}

} // namespace

PathPolyFamily path_family(int n) {
    if (n < 0) throw std::invalid_argument("path family index must be non-negative");
    auto p = path_polys_up_to(n + 1);
    PathPolyFamily fam;
    fam.n = n;
    fam.phi_path = p[n];
    // x phi(B_n) = phi(L(P_{n+1})) + phi(L(P_n)); the sum has no constant term
    fam.phi_b = n == 0 ? IntPoly::constant(1) : (p[n + 1] + p[n]).divide_by_x(1);
    // phi(L(P_{n+1})) = x phi(U_n)
    fam.phi_u = p[n + 1].divide_by_x(1);
    if (n >= 3) {
        IntPoly diff = p.back() - p[n - 1]; // p.back() = phi(L(P_{n+1}))
        IntPoly c = diff.divide_by_x(1) + IntPoly::constant(2 * alt_sign(n + 1));
        fam.phi_cycle = c;
    }
    return fam;
}

std::array<BigInt, 4> eval4_family(int n) {
    if (n < 1) throw std::invalid_argument("eval4 family needs n >= 1");
    return {BigInt(4L * n), BigInt(2L * n + 1), BigInt(n + 1L), BigInt(2 + 2 * alt_sign(n + 1))};
}

IntPoly a_path_poly(int n) {
    if (n < 0) throw std::invalid_argument("negative path index");
    IntPoly prev2 = IntPoly::constant(1); // phi(A(P_0))
    if (n == 0) return prev2;
    IntPoly prev = IntPoly::x();
    for (int i = 2; i <= n; ++i) {
        IntPoly cur = IntPoly::x() * prev - prev2;
        prev2 = std::move(prev);
        prev = std::move(cur);
    }
    return prev;
}

} // namespace specgraph
