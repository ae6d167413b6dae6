#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hdw/cyclotomic.hpp"

namespace hdw {

struct Basis {
    std::vector<std::string> labels;

    int dim() const { return (int)labels.size(); }
    const std::string& operator[](int i) const { return labels[i]; }
};

/// Basis labels distinct check.
bool labels_distinct(const Basis& b);

/// Label of a simple tensor in a product basis.
std::string pair_label(const Basis& a, const Basis& b, int i, int j);

using Vec = std::vector<CycNum>; // dense coordinates over an implied basis

struct Term {
    int idx;
    CycNum c;
};
using TermVec = std::vector<Term>; // sorted by idx, no zero coefficients

struct PairTerm {
    int a, b;
    CycNum c;
};
using PairTermVec = std::vector<PairTerm>;

Vec zero_vec(int dim, const Field& f);
Vec unit_vec(int dim, int idx, const Field& f);
bool vec_is_zero(const Vec& v);
bool vec_eq(const Vec& a, const Vec& b);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const CycNum& s, const Vec& a);
TermVec to_terms(const Vec& v);
Vec to_vec(const TermVec& t, int dim, const Field& f);
void add_term(TermVec& acc, int idx, const CycNum& c); // unsorted accumulate
TermVec normalize_terms(TermVec t);                    // sort, merge, drop zeros
std::string terms_to_string(const TermVec& t, const Basis& basis);

/// Dense linear map between based spaces, row-major (rows = codomain).
struct LinMap {
    int rows = 0, cols = 0;
    Field fld;
    std::vector<CycNum> a;

    LinMap() = default;
    LinMap(int r, int c, const Field& f);

    CycNum& at(int r, int c) { return a[(size_t)r * cols + c]; }
    const CycNum& at(int r, int c) const { return a[(size_t)r * cols + c]; }

    static LinMap identity(int n, const Field& f);
    static LinMap zero(int r, int c, const Field& f) { return LinMap(r, c, f); }

    Vec apply(const Vec& v) const;
    TermVec apply_terms(const TermVec& t) const;
    TermVec column(int c) const;
    void set_column(int c, const TermVec& t);
    void set_column(int c, const Vec& v);

    friend bool operator==(const LinMap& x, const LinMap& y);
    friend bool operator!=(const LinMap& x, const LinMap& y) { return !(x == y); }
};

LinMap tensor_map(const LinMap& f, const LinMap& g);       // Kronecker, row-major pairing
LinMap compose(const LinMap& f, const LinMap& g);          // f o g
Vec apply(const LinMap& f, const Vec& v);
LinMap flip_map(int da, int db, const Field& f);           // A(x)B -> B(x)A
LinMap map_sub(const LinMap& f, const LinMap& g);
bool map_is_zero(const LinMap& f);

/// Exact Gaussian elimination utilities over Q(zeta_m).
int rank(LinMap m);
std::optional<Vec> solve(const LinMap& A, const Vec& b);   // one solution of Ax = b
std::vector<Vec> nullspace(const LinMap& A);
std::optional<LinMap> inverse_map(const LinMap& A);

/// Membership of v in span(vs); returns coordinates when solvable.
std::optional<Vec> coords_in_span(const std::vector<Vec>& span, const Vec& v, const Field& f);

/// Finite-dimensional algebra with structure constants stored sparsely per
/// basis pair, which keeps twisted tensor products of moderate dimension
/// cheap and failure witnesses readable.
struct FDAlgebra {
    Basis basis;
    Field fld;
    std::vector<TermVec> mult; // mult[i*dim+j] = e_i * e_j
    TermVec unit;

    int dim() const { return basis.dim(); }
    const TermVec& mul(int i, int j) const { return mult[(size_t)i * dim() + j]; }
    TermVec mul_terms(const TermVec& x, const TermVec& y) const;
    Vec mul_vec(const Vec& x, const Vec& y) const;
    Vec unit_vec() const;
    Vec power(const Vec& x, long long e) const; // e >= 0
};

struct FDCoalgebra {
    Basis basis;
    Field fld;
    std::vector<PairTermVec> comult; // comult[i] = Delta(e_i)
    std::vector<CycNum> counit;

    int dim() const { return basis.dim(); }
};

/// Twisted tensor product A (x)_c B for c : B(x)A -> A(x)B.
FDAlgebra twisted_tensor_algebra(const FDAlgebra& A, const FDAlgebra& B, const LinMap& c);
/// Twisted tensor product C (x)^c D for c : C(x)D -> D(x)C.
FDCoalgebra twisted_tensor_coalgebra(const FDCoalgebra& C, const FDCoalgebra& D, const LinMap& c);

/// Convolution product mu_A o (f (x) g) o Delta_C of maps C -> A.
LinMap convolution(const LinMap& f, const LinMap& g, const FDCoalgebra& C, const FDAlgebra& A);
LinMap conv_unit(const FDCoalgebra& C, const FDAlgebra& A); // eta o eps
/// Convolution inverse by linear solve; nullopt when not invertible.
std::optional<LinMap> conv_inverse(const LinMap& f, const FDCoalgebra& C, const FDAlgebra& A);
/// Two-sided inverse of an algebra element by linear solve.
std::optional<Vec> element_inverse(const FDAlgebra& A, const Vec& x);
Vec element_power(const FDAlgebra& A, const Vec& x, long long e); // negative e via inverse

} // namespace hdw
