#pragma once

#include <vector>

#include "hdw/cyclotomic.hpp"

namespace hdw {

/// Integer coefficient polynomial in the deformation variable q.  Gauss
/// binomials live here when kept symbolic; this path is the oracle for the
/// evaluated Pascal recurrence.
struct QPoly {
    std::vector<long long> c; // coefficient of q^i at index i, trailing zeros stripped

    QPoly() = default;
    explicit QPoly(std::vector<long long> coeffs);
    static QPoly constant(long long v);
    static QPoly monomial(int k, long long v = 1);

    int degree() const { return (int)c.size() - 1; }
    bool is_zero() const { return c.empty(); }

    friend QPoly operator+(const QPoly& a, const QPoly& b);
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    friend bool operator==(const QPoly& a, const QPoly& b) { return a.c == b.c; }
    friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }

    CycNum eval(const CycNum& t) const;
    std::string to_string() const;
};

/// Gauss binomial as a polynomial, by the Pascal recurrence
/// binom(i,j)_q = q^(i-j) binom(i-1,j-1)_q + binom(i-1,j)_q.
QPoly gauss_poly(int i, int j);

/// (j)_t = sum_{i<j} t^i, by summation (never the quotient form).
CycNum q_int(int j, const CycNum& t);
/// (j)!_t = (1)_t (2)_t ... (j)_t; (0)!_t = 1.
CycNum q_fact(int j, const CycNum& t);

/// Gauss binomial evaluated at t via the Pascal recurrence, valid at every t
/// including roots of unity.  Requires 0 <= j <= i.
CycNum gauss_binom(int i, int j, const CycNum& t);

/// Chu-Vandermonde: binom(i+j,l)_q = sum_{s+u=l} q^((i-s)u) binom(i,s) binom(j,u).
bool verify_vandermonde_poly(int i, int j, int l);
bool verify_vandermonde(int i, int j, int l, const CycNum& t);

/// sum_{j=0}^{i} (-1)^j t^(j(j-1)/2) binom(i,j)_t; equals 1 at i = 0 and 0
/// for 0 < i < ord(t).
CycNum alt_sum(int i, const CycNum& t);

/// Inner sum of the closed cocycle formula:
/// sum_{j=0}^{r} (-1)^xi binom(r,j)_t t^(xi(xi-1)/2 + sj - ij), xi = s+r-i-j.
CycNum cocycle_inner_sum(int s, int r, int i, const CycNum& t);

} // namespace hdw
