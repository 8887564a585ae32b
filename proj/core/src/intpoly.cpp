#include "specgraph/intpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace specgraph {

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    c_.reserve(coeffs.size());
    for (long v : coeffs) c_.emplace_back(v);
    normalize();
}

void IntPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::constant(BigInt v) {
    IntPoly p;
    p.c_.push_back(std::move(v));
    p.normalize();
    return p;
}

IntPoly IntPoly::x() { return monomial(1, 1); }

IntPoly IntPoly::monomial(BigInt coeff, int exponent) {
    IntPoly p;
    if (coeff != 0) {
        p.c_.assign(exponent + 1, BigInt(0));
        p.c_[exponent] = std::move(coeff);
    }
    return p;
}

const BigInt& IntPoly::leading() const {
    if (c_.empty()) throw std::invalid_argument("leading coefficient of zero polynomial");
    return c_.back();
}

const BigInt& IntPoly::coeff(int i) const {
    static const BigInt zero_coeff(0);
    if (i < 0 || i >= static_cast<int>(c_.size())) return zero_coeff;
    return c_[i];
}

IntPoly IntPoly::operator-() const {
    IntPoly r(*this);
    for (auto& v : r.c_) v = -v;
    return r;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    IntPoly r;
    r.c_.resize(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < r.c_.size(); ++i) {
        if (i < c_.size()) r.c_[i] += c_[i];
        if (i < o.c_.size()) r.c_[i] += o.c_[i];
    }
    r.normalize();
    return r;
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    IntPoly r;
    r.c_.resize(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < r.c_.size(); ++i) {
        if (i < c_.size()) r.c_[i] += c_[i];
        if (i < o.c_.size()) r.c_[i] -= o.c_[i];
    }
    r.normalize();
    return r;
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly{};
    IntPoly r;
    r.c_.assign(c_.size() + o.c_.size() - 1, BigInt(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j] == 0) continue;
            mpz_addmul(r.c_[i + j].get_mpz_t(), c_[i].get_mpz_t(), o.c_[j].get_mpz_t());
        }
    }
    r.normalize();
    return r;
}

IntPoly IntPoly::operator*(const BigInt& s) const {
    if (s == 0) return IntPoly{};
    IntPoly r(*this);
    for (auto& v : r.c_) v *= s;
    return r;
}

IntPoly IntPoly::shifted(int k) const {
    if (is_zero() || k == 0) return *this;
    if (k < 0) return divide_by_x(-k);
    IntPoly r;
    r.c_.assign(c_.size() + k, BigInt(0));
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i + k] = c_[i];
    return r;
}

IntPoly IntPoly::derivative() const {
    IntPoly r;
    if (c_.size() <= 1) return r;
    r.c_.resize(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = c_[i] * BigInt(static_cast<long>(i));
    r.normalize();
    return r;
}

IntPoly IntPoly::divide_by_x(int k) const {
    if (is_zero()) return IntPoly{};
    if (static_cast<int>(c_.size()) <= k) throw std::invalid_argument("not divisible by x^k");
    for (int i = 0; i < k; ++i)
        if (c_[i] != 0) throw std::invalid_argument("not divisible by x^k");
    IntPoly r;
    r.c_.assign(c_.begin() + k, c_.end());
    return r;
}

IntPoly IntPoly::divide_exact(const IntPoly& divisor) const {
    if (divisor.is_zero()) throw std::invalid_argument("division by zero polynomial");
    if (is_zero()) return IntPoly{};
    if (degree() < divisor.degree()) throw std::invalid_argument("inexact polynomial division");
    std::vector<BigInt> rem = c_;
    const int dd = divisor.degree();
    std::vector<BigInt> quot(degree() - dd + 1);
    for (int i = degree() - dd; i >= 0; --i) {
        BigInt& top = rem[i + dd];
        if (top == 0) { quot[i] = 0; continue; }
        BigInt q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), divisor.leading().get_mpz_t());
        if (r != 0) throw std::invalid_argument("inexact polynomial division");
        quot[i] = q;
        for (int j = 0; j <= dd; ++j) rem[i + j] -= q * divisor.coeff(j);
    }
    for (const auto& v : rem)
        if (v != 0) throw std::invalid_argument("inexact polynomial division");
    return IntPoly(std::move(quot));
}

BigRat IntPoly::eval(const BigRat& x) const {
    BigRat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= x;
        acc += BigRat(*it);
    }
    return acc;
}

BigInt IntPoly::eval(const BigInt& x) const {
    BigInt acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

BigInt IntPoly::content() const {
    BigInt g(0);
    for (const auto& v : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return IntPoly{};
    BigInt g = content();
    if (leading() < 0) g = -g;
    IntPoly r(*this);
    for (auto& v : r.c_) v /= g;
    return r;
}

std::string IntPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const BigInt& v = c_[i];
        if (v == 0) continue;
        BigInt a = abs(v);
        if (first) {
            if (v < 0) os << "-";
            first = false;
        } else {
            os << (v < 0 ? " - " : " + ");
        }
        if (a != 1 || i == 0) os << a.get_str();
        if (i >= 1) {
            if (a != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
    // primitive Euclidean remainder sequence; adequate at charpoly degrees
    IntPoly f = a.primitive_part(), g = b.primitive_part();
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    if (f.degree() < g.degree()) std::swap(f, g);
    while (!g.is_zero()) {
        // pseudo-remainder of f by g
        IntPoly r = f;
        const int dg = g.degree();
        while (!r.is_zero() && r.degree() >= dg) {
            IntPoly t = IntPoly::monomial(r.leading(), r.degree() - dg);
            r = r * g.leading() - t * g;
        }
        f = g;
        g = r.primitive_part();
    }
    return f.primitive_part();
}

int zero_multiplicity(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("zero polynomial has no zero multiplicity");
    int j = 0;
    while (p.coeff(j) == 0) ++j;
    return j;
}

BigInt moments(const IntPoly& p, int k) {
    if (!p.is_monic()) throw std::invalid_argument("moments requires a monic polynomial");
    if (k < 0 || k > kMaxMomentOrder) throw std::invalid_argument("moment order out of range");
    const int n = p.degree();
    if (k == 0) return BigInt(n);
    // e_i = (-1)^i [x^{n-i}], Newton: p_k = sum_{i<k} (-1)^{i-1} e_i p_{k-i} + (-1)^{k-1} k e_k
    std::vector<BigInt> e(k + 1), ps(k + 1);
    for (int i = 1; i <= k; ++i)
        e[i] = (i % 2 ? -p.coeff(n - i) : p.coeff(n - i)); // zero when i > n
    ps[0] = n;
    for (int j = 1; j <= k; ++j) {
        BigInt acc(0);
        for (int i = 1; i < j; ++i) {
            BigInt term = e[i] * ps[j - i];
            acc += (i % 2 ? term : -term);
        }
        BigInt last = e[j] * BigInt(j);
        acc += (j % 2 ? last : -last);
        ps[j] = acc;
    }
    return ps[k];
}

} // namespace specgraph
