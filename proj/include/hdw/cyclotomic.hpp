#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hdw/rational.hpp"

namespace hdw {

class CycNum;

/// The cyclotomic field Q(zeta_m) for a fixed root order m, presented as
/// Q[t]/(Phi_m).  Elements are reduced to the power basis
/// {1, zeta, ..., zeta^(phi(m)-1)}, which gives a unique normal form and
/// therefore decidable exact equality.
class CycField : public std::enable_shared_from_this<CycField> {
public:
    static std::shared_ptr<const CycField> make(int m);

    int m() const { return m_; }
    int degree() const { return degree_; }
    const std::vector<long long>& phi() const { return phi_; }

    CycNum zero() const;
    CycNum one() const;
    CycNum from_rational(const Rational& r) const;
    CycNum from_int(long long n) const;
    CycNum zeta(int k = 1) const;       // zeta_m^k
    CycNum from_poly(const std::vector<Rational>& coeffs) const; // reduces mod Phi_m

private:
    explicit CycField(int m);
    int m_;
    std::vector<long long> phi_; // Phi_m, coefficient of t^i at index i, monic
    int degree_;                 // Euler totient phi(m)
};

using Field = std::shared_ptr<const CycField>;

/// Element of Q(zeta_m): rational coefficient vector of length phi(m) in the
/// power basis.  Immutable in spirit; all operators return fresh values.
class CycNum {
public:
    CycNum() = default; // "no field" sentinel; only assignment is valid
    CycNum(Field fld, std::vector<Rational> coeffs);

    const Field& field() const { return fld_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;                 // supported on zeta^0 only
    std::optional<Rational> as_rational() const;

    friend CycNum operator+(const CycNum& a, const CycNum& b);
    friend CycNum operator-(const CycNum& a, const CycNum& b);
    friend CycNum operator*(const CycNum& a, const CycNum& b);
    friend CycNum operator/(const CycNum& a, const CycNum& b);
    CycNum operator-() const;
    CycNum inv() const;                       // throws on zero
    CycNum pow(long long e) const;            // negative e via inv()
    CycNum& operator+=(const CycNum& o) { return *this = *this + o; }
    CycNum& operator-=(const CycNum& o) { return *this = *this - o; }
    CycNum& operator*=(const CycNum& o) { return *this = *this * o; }

    friend bool operator==(const CycNum& a, const CycNum& b);
    friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

    /// Least n >= 1 with a^n = 1, searched up to lcm(2, m); nullopt when a is
    /// not a root of unity.
    std::optional<int> mult_order() const;

    /// Canonical rendering in the config literal grammar, e.g.
    /// "rat(1) + rat(-1/2)*zeta(3)"; zero prints as "rat(0)".
    std::string to_string() const;

private:
    Field fld_;
    std::vector<Rational> c_;
};

/// Phi_m as an integer coefficient vector (index = power), computed by exact
/// division of t^m - 1 by the proper cyclotomic divisors.
std::vector<long long> cyclotomic_polynomial(int m);

/// lcm helper used to pick the session field order from the orders of all
/// roots of unity in a datum.
long long lcm_ll(long long a, long long b);

} // namespace hdw
