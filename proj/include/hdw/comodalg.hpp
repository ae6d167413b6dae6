#pragma once

#include "hdw/comodule.hpp"

namespace hdw {

/// Right H_D-comodule algebra datum: an algebra with a G(chi,z)^op-graded
/// homogeneous basis, an algebra automorphism alpha and the ladder operator.
struct ComoduleAlgebraData {
    FDAlgebra B;
    std::vector<int> deg_g;
    std::vector<int> deg_aut;
    LinMap alpha;
    LinMap ladder;

    HDComoduleData as_comodule() const { return {B.basis, deg_g, deg_aut, alpha, ladder}; }
};

/// Staged validation: structural invariants, then the gradation
/// compatibility with the datum (algebra gradation when lambda(z^n-1) = 0,
/// otherwise the two-component inclusion and the lower-component formula),
/// then the twisted Leibniz rule.  Earlier failures give sharper witnesses.
Report validate_comodalg(const ComoduleAlgebraData& B, const HDAlgebra& HD, const AutContext& ctx);

struct ComodAlgBuilt {
    LinMap s;
    LinMap nu;
    Report rep;
};

/// Builds (s, nu) and verifies every right-H-comodule-algebra axiom
/// exhaustively, in particular nu o mu = (mu (x) mu)(B (x) s (x) H)(nu (x) nu)
/// and nu(1) = 1 (x) 1 — equivalently, nu : B -> B (x)_s H is an algebra map.
ComodAlgBuilt build_comodule_algebra(const ComoduleAlgebraData& B, const HDAlgebra& HD,
                                     const AutContext& ctx);

/// B_G = ker(ladder): verified to be a unital subalgebra, s-stable, with the
/// restricted coaction landing in B_G (x) kG.
struct InducedSubalgebra {
    std::vector<Vec> basis;
    Report rep;
};
InducedSubalgebra induced_kG_subalgebra(const ComoduleAlgebraData& B, const HDAlgebra& HD,
                                        const AutContext& ctx);

/// The regular comodule algebra B = H_D.
ComoduleAlgebraData regular_comodalg(const HDAlgebra& HD, const AutContext& ctx);

/// Recovers comodule-algebra data from candidate (s, nu) on a given algebra.
std::pair<ComoduleAlgebraData, Report> comodalg_data_from_maps(const FDAlgebra& B, const LinMap& s,
                                                               const LinMap& nu,
                                                               const HDAlgebra& HD,
                                                               const AutContext& ctx);

} // namespace hdw
