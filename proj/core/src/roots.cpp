#include "specgraph/roots.hpp"

#include <stdexcept>

namespace specgraph {
namespace {

// remainder of f by g scaled by a positive power of lc(g); sign-safe for
// Sturm chains (only positive multiples of the true remainder)
IntPoly rem_positive_scaled(const IntPoly& f, const IntPoly& g) {
    IntPoly r = f;
    const int dg = g.degree();
    const BigInt lc2 = g.leading() * g.leading();
    while (!r.is_zero() && r.degree() >= dg) {
        IntPoly t = IntPoly::monomial(r.leading() * g.leading(), r.degree() - dg);
        r = r * lc2 - t * g;
    }
    return r;
}

// positive-constant scaling only: dividing by the content keeps every sign
// in the chain intact (primitive_part would flip negative leaders)
IntPoly strip_content(const IntPoly& p) {
    if (p.is_zero()) return p;
    return p.divide_exact(IntPoly::constant(p.content()));
}

std::vector<IntPoly> sturm_chain(const IntPoly& squarefree) {
    std::vector<IntPoly> chain;
    chain.push_back(strip_content(squarefree));
    IntPoly d = squarefree.derivative();
    if (d.is_zero()) return chain;
    chain.push_back(strip_content(d));
    while (true) {
        const IntPoly& a = chain[chain.size() - 2];
        const IntPoly& b = chain.back();
        IntPoly r = -rem_positive_scaled(a, b);
        if (r.is_zero()) break;
        chain.push_back(strip_content(r));
        if (chain.back().degree() == 0) break;
    }
    return chain;
}

long variations_at(const std::vector<IntPoly>& chain, const BigRat& x) {
    long v = 0;
    int prev = 0;
    for (const auto& p : chain) {
        int s = sign_of(p.eval(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

long variations_at_plus_infinity(const std::vector<IntPoly>& chain) {
    long v = 0;
    int prev = 0;
    for (const auto& p : chain) {
        int s = sign_of(p.leading());
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

} // namespace

std::vector<std::pair<IntPoly, int>> square_free_decomposition(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("square-free decomposition of zero");
    std::vector<std::pair<IntPoly, int>> out;
    IntPoly f = p.primitive_part();
    if (f.degree() <= 0) return out;
    IntPoly d = gcd(f, f.derivative());
    if (d.degree() == 0) {
        out.emplace_back(f, 1);
        return out;
    }
    // Yun's algorithm; every division here is exact over the integers
    IntPoly w = f.divide_exact(d);
    IntPoly y = f.derivative().divide_exact(d);
    IntPoly z = y - w.derivative();
    int i = 1;
    while (w.degree() > 0) {
        IntPoly g = gcd(w, z);
        if (g.degree() > 0) out.emplace_back(g, i);
        w = w.divide_exact(g);
        y = z.divide_exact(g);
        z = y - w.derivative();
        ++i;
    }
    return out;
}

long count_roots_greater(const IntPoly& p, const BigRat& bound, bool strict) {
    if (p.is_zero()) throw std::invalid_argument("root counting on zero polynomial");
    long total = 0;
    for (const auto& [f, mult] : square_free_decomposition(p)) {
        auto chain = sturm_chain(f);
        long distinct_above = variations_at(chain, bound) - variations_at_plus_infinity(chain);
        total += mult * distinct_above;
        if (!strict && f.eval(bound) == 0) total += mult;
    }
    return total;
}

int root_multiplicity(const IntPoly& p, const BigRat& root) {
    if (p.is_zero()) throw std::invalid_argument("root multiplicity on zero polynomial");
    int m = 0;
    for (const auto& [f, mult] : square_free_decomposition(p))
        if (f.eval(root) == 0) m += mult;
    return m;
}

} // namespace specgraph
