#include "hdw/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace hdw {

long long lcm_ll(long long a, long long b) { return a / std::gcd(a, b) * b; }

namespace {

// exact division of integer polynomials, remainder must vanish
std::vector<long long> exact_divide(std::vector<long long> num, const std::vector<long long>& den) {
    if (den.empty() || den.back() == 0) throw std::invalid_argument("exact_divide: bad divisor");
    int dn = (int)num.size() - 1, dd = (int)den.size() - 1;
    if (dn < dd) throw std::invalid_argument("exact_divide: degree mismatch");
    std::vector<long long> quot(dn - dd + 1, 0);
    for (int i = dn; i >= dd; --i) {
        if (num[i] == 0) continue;
        if (num[i] % den[dd] != 0) throw std::logic_error("exact_divide: not divisible");
        long long q = num[i] / den[dd];
        quot[i - dd] = q;
        for (int j = 0; j <= dd; ++j) num[i - dd + j] -= q * den[j];
    }
    for (long long v : num)
        if (v != 0) throw std::logic_error("exact_divide: nonzero remainder");
    return quot;
}

} // namespace

std::vector<long long> cyclotomic_polynomial(int m) {
    if (m < 1) throw std::invalid_argument("cyclotomic_polynomial: m >= 1 required");
    static std::map<int, std::vector<long long>> cache;
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    // t^m - 1
    std::vector<long long> num(m + 1, 0);
    num[0] = -1;
    num[m] = 1;
    std::vector<long long> result;
    if (m == 1) {
        result = {-1, 1};
    } else {
        std::vector<long long> acc = num;
        for (int d = 1; d < m; ++d)
            if (m % d == 0) acc = exact_divide(acc, cyclotomic_polynomial(d));
        result = acc;
    }
    cache[m] = result;
    return result;
}

CycField::CycField(int m) : m_(m) {
    phi_ = cyclotomic_polynomial(m);
    degree_ = (int)phi_.size() - 1;
}

std::shared_ptr<const CycField> CycField::make(int m) {
    if (m < 1 || m > 4096) throw std::invalid_argument("CycField: m out of range");
    return std::shared_ptr<const CycField>(new CycField(m));
}

CycNum CycField::zero() const {
    return CycNum(shared_from_this(), std::vector<Rational>(degree_));
}

CycNum CycField::one() const { return from_int(1); }

CycNum CycField::from_rational(const Rational& r) const {
    std::vector<Rational> c(degree_);
    c[0] = r;
    return CycNum(shared_from_this(), std::move(c));
}

CycNum CycField::from_int(long long n) const { return from_rational(Rational(n)); }

CycNum CycField::zeta(int k) const {
    long long kk = ((long long)k % m_ + m_) % m_;
    std::vector<Rational> c(kk + 1);
    c[kk] = Rational(1);
    return from_poly(c);
}

CycNum CycField::from_poly(const std::vector<Rational>& coeffs) const {
    std::vector<Rational> c = coeffs;
    // reduce mod Phi_m (monic)
    for (int i = (int)c.size() - 1; i >= degree_; --i) {
        if (c[i].is_zero()) continue;
        Rational lead = c[i];
        for (int j = 0; j <= degree_; ++j)
            c[i - degree_ + j] -= lead * Rational(phi_[j]);
    }
    c.resize(degree_);
    return CycNum(shared_from_this(), std::move(c));
}

CycNum::CycNum(Field fld, std::vector<Rational> coeffs) : fld_(std::move(fld)), c_(std::move(coeffs)) {
    if ((int)c_.size() != fld_->degree()) throw std::invalid_argument("CycNum: coefficient length");
}

bool CycNum::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r.is_zero(); });
}

bool CycNum::is_one() const {
    if (!c_[0].is_one()) return false;
    for (size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

bool CycNum::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

std::optional<Rational> CycNum::as_rational() const {
    if (!is_rational()) return std::nullopt;
    return c_[0];
}

static void check_same_field(const CycNum& a, const CycNum& b) {
    if (a.field()->m() != b.field()->m())
        throw std::invalid_argument("CycNum: mixed field orders");
}

CycNum operator+(const CycNum& a, const CycNum& b) {
    check_same_field(a, b);
    std::vector<Rational> c(a.c_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.c_[i] + b.c_[i];
    return CycNum(a.fld_, std::move(c));
}

CycNum operator-(const CycNum& a, const CycNum& b) {
    check_same_field(a, b);
    std::vector<Rational> c(a.c_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.c_[i] - b.c_[i];
    return CycNum(a.fld_, std::move(c));
}

CycNum CycNum::operator-() const {
    std::vector<Rational> c(c_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = -c_[i];
    return CycNum(fld_, std::move(c));
}

CycNum operator*(const CycNum& a, const CycNum& b) {
    check_same_field(a, b);
    size_t d = a.c_.size();
    std::vector<Rational> prod(2 * d - 1);
    for (size_t i = 0; i < d; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < d; ++j) {
            if (b.c_[j].is_zero()) continue;
            prod[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return a.fld_->from_poly(prod);
}

namespace {

using QPolyVec = std::vector<Rational>;

int deg_of(const QPolyVec& p) {
    for (int i = (int)p.size() - 1; i >= 0; --i)
        if (!p[i].is_zero()) return i;
    return -1;
}

QPolyVec poly_sub_scaled(QPolyVec a, const QPolyVec& b, const Rational& s, int shift) {
    if ((int)a.size() < (int)b.size() + shift) a.resize(b.size() + shift);
    for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= s * b[i];
    return a;
}

// division with remainder over Q
void poly_divmod(const QPolyVec& num, const QPolyVec& den, QPolyVec& quot, QPolyVec& rem) {
    int dd = deg_of(den);
    if (dd < 0) throw std::domain_error("poly_divmod: zero divisor");
    rem = num;
    quot.assign(std::max<size_t>(1, num.size()), Rational(0));
    for (int i = deg_of(rem); i >= dd; i = deg_of(rem)) {
        Rational f = rem[i] / den[dd];
        quot[i - dd] += f;
        rem = poly_sub_scaled(rem, den, f, i - dd);
        rem.resize(i); // leading term cancelled exactly
        if (rem.empty()) break;
    }
}

QPolyVec poly_mul(const QPolyVec& a, const QPolyVec& b) {
    int da = deg_of(a), db = deg_of(b);
    if (da < 0 || db < 0) return {Rational(0)};
    QPolyVec r(da + db + 1);
    for (int i = 0; i <= da; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; j <= db; ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

QPolyVec poly_sub(QPolyVec a, const QPolyVec& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    return a;
}

} // namespace

CycNum CycNum::inv() const {
    if (is_zero()) throw std::domain_error("CycNum: inverse of zero");
    // extended Euclid against Phi_m over Q[t]
    QPolyVec r0(fld_->phi().size());
    for (size_t i = 0; i < r0.size(); ++i) r0[i] = Rational(fld_->phi()[i]);
    QPolyVec r1(c_.begin(), c_.end());
    QPolyVec s0 = {Rational(0)}, s1 = {Rational(1)}; // Bezout coefficients of the element
    while (true) {
        int d1 = deg_of(r1);
        if (d1 <= 0) break;
        QPolyVec q, rem;
        poly_divmod(r0, r1, q, rem);
        QPolyVec s2 = poly_sub(s0, poly_mul(q, s1));
        r0 = r1;
        r1 = rem.empty() ? QPolyVec{Rational(0)} : rem;
        s0 = s1;
        s1 = s2;
    }
    int d1 = deg_of(r1);
    if (d1 != 0) throw std::logic_error("CycNum::inv: gcd with Phi_m not constant");
    Rational g = r1[0];
    QPolyVec res(s1.size());
    for (size_t i = 0; i < s1.size(); ++i) res[i] = s1[i] / g;
    return fld_->from_poly(res);
}

CycNum operator/(const CycNum& a, const CycNum& b) { return a * b.inv(); }

CycNum CycNum::pow(long long e) const {
    if (e < 0) return inv().pow(-e);
    CycNum base = *this, acc = fld_->one();
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool operator==(const CycNum& a, const CycNum& b) {
    check_same_field(a, b);
    return a.c_ == b.c_;
}

std::optional<int> CycNum::mult_order() const {
    if (is_zero()) return std::nullopt;
    long long bound = lcm_ll(2, fld_->m());
    CycNum acc = *this;
    for (int n = 1; n <= bound; ++n) {
        if (acc.is_one()) return n;
        acc = acc * *this;
    }
    return std::nullopt;
}

std::string CycNum::to_string() const {
    std::string out;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "rat(" + c_[i].to_string() + ")";
        if (i > 0) out += "*zeta(" + std::to_string(i) + ")";
    }
    if (out.empty()) out = "rat(0)";
    return out;
}

} // namespace hdw
