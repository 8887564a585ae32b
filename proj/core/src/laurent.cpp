#include "specgraph/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace specgraph {

void LaurentPoly::check_exponent(long e) {
    if (e > kLaurentExponentCap || e < -kLaurentExponentCap)
        throw std::overflow_error("Laurent exponent out of range");
}

LaurentPoly LaurentPoly::term(BigInt coeff, long exponent) {
    LaurentPoly p;
    p.add_term(coeff, exponent);
    return p;
}

LaurentPoly LaurentPoly::from_int_poly(const IntPoly& p) {
    LaurentPoly r;
    for (int i = 0; i <= p.degree(); ++i) r.add_term(p.coeff(i), i);
    return r;
}

BigInt LaurentPoly::coeff(long exponent) const {
    auto it = c_.find(exponent);
    return it == c_.end() ? BigInt(0) : it->second;
}

std::optional<long> LaurentPoly::min_exponent() const {
    if (c_.empty()) return std::nullopt;
    return c_.begin()->first;
}

std::optional<long> LaurentPoly::max_exponent() const {
    if (c_.empty()) return std::nullopt;
    return c_.rbegin()->first;
}

void LaurentPoly::add_term(const BigInt& coeff, long exponent) {
    if (coeff == 0) return;
    check_exponent(exponent);
    auto [it, inserted] = c_.try_emplace(exponent, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) c_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(*this);
    for (auto& [e, v] : r.c_) v = -v;
    return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r(*this);
    for (const auto& [e, v] : o.c_) r.add_term(v, e);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r(*this);
    for (const auto& [e, v] : o.c_) r.add_term(-v, e);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [e1, v1] : c_)
        for (const auto& [e2, v2] : o.c_)
            r.add_term(v1 * v2, e1 + e2);
    return r;
}

LaurentPoly LaurentPoly::operator*(const BigInt& s) const {
    LaurentPoly r;
    if (s == 0) return r;
    for (const auto& [e, v] : c_) r.c_.emplace(e, v * s);
    return r;
}

LaurentPoly LaurentPoly::shifted(long k) const {
    LaurentPoly r;
    for (const auto& [e, v] : c_) {
        check_exponent(e + k);
        r.c_.emplace(e + k, v);
    }
    return r;
}

std::optional<long> LaurentPoly::first_mismatch(const LaurentPoly& o) const {
    auto a = c_.begin();
    auto b = o.c_.begin();
    while (a != c_.end() || b != o.c_.end()) {
        if (b == o.c_.end() || (a != c_.end() && a->first < b->first)) return a->first;
        if (a == c_.end() || b->first < a->first) return b->first;
        if (a->second != b->second) return a->first;
        ++a;
        ++b;
    }
    return std::nullopt;
}

std::string LaurentPoly::to_string(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        const auto& [e, v] = *it;
        BigInt a = abs(v);
        if (first) {
            if (v < 0) os << "-";
            first = false;
        } else {
            os << (v < 0 ? " - " : " + ");
        }
        if (a != 1 || e == 0) os << a.get_str();
        if (e != 0) {
            if (a != 1) os << "*";
            os << var;
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

const char* to_string(MatrixKind kind) {
    switch (kind) {
        case MatrixKind::A: return "A";
        case MatrixKind::L: return "L";
        case MatrixKind::Q: return "Q";
    }
    return "?";
}

MatrixKind matrix_kind_from_string(const std::string& s) {
    if (s == "A" || s == "a") return MatrixKind::A;
    if (s == "L" || s == "l") return MatrixKind::L;
    if (s == "Q" || s == "q") return MatrixKind::Q;
    throw std::invalid_argument("unknown matrix kind: " + s);
}

LaurentPoly laurent_from_charpoly(const IntPoly& p, MatrixKind kind) {
    // p(x) = sum c_j x^j; with x = u(y)/y the result y^n p(x) =
    // sum c_j u(y)^j y^{n-j}, where u = (y+1)^2 for L/Q and u = y^2+1 for A.
    const int n = p.degree();
    if (n < 0) return LaurentPoly{};
    const IntPoly u = (kind == MatrixKind::A) ? IntPoly{1, 0, 1} : IntPoly{1, 2, 1};
    LaurentPoly out;
    IntPoly upow = IntPoly::constant(1);
    for (int j = 0; j <= n; ++j) {
        if (p.coeff(j) != 0) {
            for (int i = 0; i <= upow.degree(); ++i)
                out.add_term(p.coeff(j) * upow.coeff(i), i + n - j);
        }
        if (j < n) upow = upow * u;
    }
    return out;
}

} // namespace specgraph
