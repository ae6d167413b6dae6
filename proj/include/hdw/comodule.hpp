#pragma once

#include "hdw/hd.hpp"

namespace hdw {

/// Aut_{chi,z}(G) with composition/inverse lookup tables; the automorphism
/// indices used by degree assignments refer to this list (sorted, so the
/// indexing is reproducible).
struct AutContext {
    std::vector<GroupAutomorphism> auts;
    int id_index = -1;
    std::vector<int> comp_tbl; // comp_tbl[i*A+j] = index of auts[i] o auts[j]
    std::vector<int> inv_tbl;

    int count() const { return (int)auts.size(); }
    int comp(int i, int j) const { return comp_tbl[i * count() + j]; }
    int inv(int i) const { return inv_tbl[i]; }
    int index_of(const GroupAutomorphism& a) const;
};

AutContext make_aut_context(const HDAlgebra& HD, int max_order = 64);

/// Left H_D-space datum: Aut_{chi,z}(G)-graded space with a compatible
/// automorphism alpha.
struct HDSpaceData {
    Basis basis;
    std::vector<int> deg_aut; // component of each basis vector
    LinMap alpha;
};

Report validate_space_data(const HDSpaceData& V, const HDAlgebra& HD, const AutContext& ctx);

/// s(g x^i (x) v) = alpha^i(v) (x) zeta(g) x^i, then all left-H-space
/// compatibilities verified exhaustively.
std::pair<LinMap, Report> build_transposition(const HDSpaceData& V, const HDAlgebra& HD,
                                              const AutContext& ctx);

/// The left-H-space axioms alone, for an arbitrary candidate s.
Report verify_left_H_space(const LinMap& s, int dimV, const HDAlgebra& HD);

/// k[G]-space from an Aut(G)-gradation: s(g (x) v) = v (x) zeta_v(g).
std::pair<LinMap, Report> kG_space_from_gradation(const FiniteGroup& G,
                                                  const std::vector<GroupAutomorphism>& degs,
                                                  const Field& fld);

/// Checks the coefficient-family conditions (complete orthogonal
/// idempotents, alpha_1^1 = id, composition rule) for any candidate
/// s : kG (x) V -> V (x) kG, plus bijectivity.
Report verify_kG_space(const LinMap& s, const FiniteGroup& G, int dimV, const Field& fld);

/// Right H_D-comodule datum: G x Aut_{chi,z}(G)-graded space, alpha, and the
/// ladder operator (the comodule operator written U in the source results;
/// renamed here to avoid the radical element U of the algebra datum).
struct HDComoduleData {
    Basis basis;
    std::vector<int> deg_g;
    std::vector<int> deg_aut;
    LinMap alpha;
    LinMap ladder;
};

Report validate_comodule_data(const HDComoduleData& V, const HDAlgebra& HD, const AutContext& ctx);

struct ComoduleBuilt {
    LinMap s;  // H (x) V -> V (x) H
    LinMap nu; // V -> V (x) H
    Report rep;
};

/// nu(v) = sum_j (1/(j)!_{qp}) ladder^j(v) (x) z^{-j} g x^j for v in V_g;
/// counit, coassociativity and the s-compatibility are then verified.
ComoduleBuilt build_coaction(const HDComoduleData& V, const HDAlgebra& HD, const AutContext& ctx);

/// V^{coH} = V_{1_G} n ker(ladder), cross-checked against nu(v) = v (x) 1.
/// The basis is homogeneous; zeta_of[i] is the Aut component of basis i.
struct Coinvariants {
    std::vector<Vec> basis;
    std::vector<int> zeta_of;
    Report rep;
};
Coinvariants coinvariants(const HDComoduleData& V, const HDAlgebra& HD, const AutContext& ctx);

/// The family U^g_i built from (degrees, ladder) and checked against the
/// six characterizing conditions; nu reconstructed from the family is
/// compared with build_coaction entrywise.
struct UFamily {
    std::vector<std::vector<LinMap>> U; // U[g][i]
    Report rep;
};
UFamily derive_U_family(const HDComoduleData& V, const HDAlgebra& HD, const AutContext& ctx);

/// The regular comodule V = H_D: degree(g x^i) = (g z^i, id),
/// alpha(g x^i) = q^i g x^i, ladder(g x^i) = (i)_{qp} g x^{i-1}.
HDComoduleData regular_comodule(const HDAlgebra& HD, const AutContext& ctx);

/// Recovers (degrees, alpha, ladder) from candidate maps (s, nu); fails when
/// the basis is not homogeneous or the maps are not of H_D-comodule shape.
std::pair<HDComoduleData, Report> comodule_data_from_maps(const Basis& basis, const LinMap& s,
                                                          const LinMap& nu, const HDAlgebra& HD,
                                                          const AutContext& ctx);

} // namespace hdw
