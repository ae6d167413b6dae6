#pragma once

#include "hdw/braided.hpp"
#include "hdw/groups.hpp"
#include "hdw/qcalc.hpp"

namespace hdw {

/// Datum for the algebra B_E: a group, a character, the radical element
/// U = sum lambda_g g of the group algebra, and the truncation degree n.
struct DatumE {
    FiniteGroup G;
    Character chi;
    Vec U; // coefficients lambda_g over the group basis
    int n = 0;
};

/// Both defining conditions checked exhaustively: conjugation covariance
/// lambda_{hgh^-1} = chi^n(h) lambda_g, and chi(g) = 1 wherever lambda_g != 0.
Report validate_datum_E(const DatumE& E, const Field& fld);

/// Algebra on the basis {g x^i} with
///   g x^i . h x^j = chi^i(h) gh x^(i+j)        if i+j < n
///                   chi^i(h) gh U x^(i+j-n)    otherwise;
/// associativity is then verified exhaustively.  Throws on an invalid datum.
FDAlgebra build_BE(const DatumE& E, const Field& fld);

/// Datum (G, chi, z, lambda, q) for the braided Hopf algebra H_D.
struct DatumD {
    FiniteGroup G;
    Character chi;
    int z = 0;
    CycNum lambda;
    CycNum q;
};

/// Derived quantities of a valid datum.
struct DatumDInfo {
    int n = 0;        // order of q chi(z), must be > 1
    CycNum p;         // chi(z)
    CycNum qp;        // q chi(z)
    Vec U;            // lambda (z^n - 1) in kG coordinates
    bool U_nonzero = false;
    CycNum lambda;    // normalized: 0 when lambda (z^n - 1) = 0
};

Report validate_datum_D(const DatumD& D, const Field& fld, DatumDInfo* out = nullptr);

/// The braided Hopf algebra H_D on the basis {(g,i)}, fully verified on
/// construction.
struct HDAlgebra {
    BraidedBialgebra H;
    DatumD datum;
    DatumDInfo info;
    int gcount = 0, n = 0;

    int dim() const { return gcount * n; }
    int bidx(int g, int i) const { return g * n + i; }
    int g_of(int idx) const { return idx / n; }
    int i_of(int idx) const { return idx % n; }
    const Field& field() const { return H.alg.fld; }
    const FiniteGroup& group() const { return datum.G; }
    /// true when (p,q) = (1,-1): excluded from the comodule/cleft theory.
    bool pq_excluded() const;
};

/// Builds and verifies H_D; throws with a witness when any braided
/// bialgebra/Hopf check fails.
HDAlgebra build_HD(const DatumD& D, const Field& fld);

/// Taft algebra H_{n^2} as the datum (C_n, chi, g, 1, q=1) with
/// chi(g) = xi a primitive n-th root of unity.
HDAlgebra taft(int n, const CycNum& xi);

/// Basis labels for {g x^i}.
Basis hd_basis(const FiniteGroup& G, int n);

} // namespace hdw
