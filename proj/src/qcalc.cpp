#include "hdw/qcalc.hpp"

#include <stdexcept>

namespace hdw {

QPoly::QPoly(std::vector<long long> coeffs) : c(std::move(coeffs)) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

QPoly QPoly::constant(long long v) { return QPoly({v}); }

QPoly QPoly::monomial(int k, long long v) {
    std::vector<long long> c(k + 1, 0);
    c[k] = v;
    return QPoly(std::move(c));
}

QPoly operator+(const QPoly& a, const QPoly& b) {
    std::vector<long long> c(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < a.c.size(); ++i) c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) c[i] += b.c[i];
    return QPoly(std::move(c));
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return QPoly();
    std::vector<long long> c(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) c[i + j] += a.c[i] * b.c[j];
    return QPoly(std::move(c));
}

CycNum QPoly::eval(const CycNum& t) const {
    CycNum acc = t.field()->zero();
    for (int i = degree(); i >= 0; --i) acc = acc * t + t.field()->from_int(c[i]);
    return acc;
}

std::string QPoly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        if (!out.empty()) out += " + ";
        out += std::to_string(c[i]);
        if (i > 0) out += "*q^" + std::to_string(i);
    }
    return out;
}

QPoly gauss_poly(int i, int j) {
    if (j < 0 || i < 0 || j > i) throw std::invalid_argument("gauss_poly: need 0 <= j <= i");
    // row-by-row Pascal table
    std::vector<QPoly> row = {QPoly::constant(1)};
    for (int r = 1; r <= i; ++r) {
        std::vector<QPoly> next(std::min(r, j) + 1);
        next[0] = QPoly::constant(1);
        for (int k = 1; k <= std::min(r, j); ++k) {
            QPoly left = (k - 1 < (int)row.size()) ? QPoly::monomial(r - k) * row[k - 1] : QPoly();
            QPoly right = (k < (int)row.size()) ? row[k] : QPoly();
            next[k] = left + right;
        }
        row = std::move(next);
    }
    return row[j];
}

CycNum q_int(int j, const CycNum& t) {
    if (j < 0) throw std::invalid_argument("q_int: j >= 0 required");
    CycNum acc = t.field()->zero();
    CycNum pw = t.field()->one();
    for (int i = 0; i < j; ++i) {
        acc = acc + pw;
        pw = pw * t;
    }
    return acc;
}

CycNum q_fact(int j, const CycNum& t) {
    if (j < 0) throw std::invalid_argument("q_fact: j >= 0 required");
    CycNum acc = t.field()->one();
    for (int i = 1; i <= j; ++i) acc = acc * q_int(i, t);
    return acc;
}

CycNum gauss_binom(int i, int j, const CycNum& t) {
    if (j < 0 || i < 0 || j > i) throw std::invalid_argument("gauss_binom: need 0 <= j <= i");
    const Field& F = t.field();
    std::vector<CycNum> row = {F->one()};
    for (int r = 1; r <= i; ++r) {
        std::vector<CycNum> next(std::min(r, j) + 1, F->zero());
        next[0] = F->one();
        for (int k = 1; k <= std::min(r, j); ++k) {
            CycNum left = (k - 1 < (int)row.size()) ? t.pow(r - k) * row[k - 1] : F->zero();
            CycNum right = (k < (int)row.size()) ? row[k] : F->zero();
            next[k] = left + right;
        }
        row = std::move(next);
    }
    return row[j];
}

bool verify_vandermonde_poly(int i, int j, int l) {
    if (l < 0 || l > i + j) throw std::invalid_argument("verify_vandermonde: 0 <= l <= i+j");
    QPoly lhs = gauss_poly(i + j, l);
    QPoly rhs;
    for (int s = 0; s <= std::min(i, l); ++s) {
        int u = l - s;
        if (u > j) continue;
        rhs = rhs + QPoly::monomial((i - s) * u) * gauss_poly(i, s) * gauss_poly(j, u);
    }
    return lhs == rhs;
}

bool verify_vandermonde(int i, int j, int l, const CycNum& t) {
    if (l < 0 || l > i + j) throw std::invalid_argument("verify_vandermonde: 0 <= l <= i+j");
    CycNum lhs = gauss_binom(i + j, l, t);
    CycNum rhs = t.field()->zero();
    for (int s = 0; s <= std::min(i, l); ++s) {
        int u = l - s;
        if (u > j) continue;
        rhs = rhs + t.pow((long long)(i - s) * u) * gauss_binom(i, s, t) * gauss_binom(j, u, t);
    }
    return lhs == rhs;
}

CycNum alt_sum(int i, const CycNum& t) {
    CycNum acc = t.field()->zero();
    for (int j = 0; j <= i; ++j) {
        CycNum term = t.pow((long long)j * (j - 1) / 2) * gauss_binom(i, j, t);
        if (j % 2) term = -term;
        acc = acc + term;
    }
    return acc;
}

CycNum cocycle_inner_sum(int s, int r, int i, const CycNum& t) {
    CycNum acc = t.field()->zero();
    for (int j = 0; j <= r; ++j) {
        long long xi = s + r - i - j;
        CycNum term = gauss_binom(r, j, t) * t.pow(xi * (xi - 1) / 2 + (long long)s * j - (long long)i * j);
        if (xi % 2) term = -term;
        acc = acc + term;
    }
    return acc;
}

} // namespace hdw
