#pragma once

#include <optional>

#include "hdw/groups.hpp"
#include "hdw/report.hpp"
#include "hdw/tensor.hpp"

namespace hdw {

/// Braided bialgebra container: algebra and coalgebra on one basis plus the
/// braid c on H(x)H and an optional antipode.  Raw construction is allowed
/// so negative tests can feed broken structures to the verifiers; use
/// make_verified for the validating path.
struct BraidedBialgebra {
    FDAlgebra alg;
    FDCoalgebra coalg;
    LinMap braid;                 // H(x)H -> H(x)H
    std::optional<LinMap> antipode;

    int dim() const { return alg.dim(); }
    const Basis& basis() const { return alg.basis; }
    const Field& field() const { return alg.fld; }
};

/// Braid compatibility with both algebra and coalgebra legs, plus
/// bijectivity.  Every check is an exact universally quantified equality
/// over basis tuples; entries carry the first failing witness.
Report verify_braid_compat(const BraidedBialgebra& H);

/// Algebra + coalgebra axioms, eps/eta morphism conditions and
/// Delta o mu = (mu (x) mu)(H (x) c (x) H)(Delta (x) Delta).
Report verify_bialgebra(const BraidedBialgebra& H);

/// S * id = id * S = eta o eps, and S o mu = mu o (S (x) S) o c.
Report verify_antipode(const BraidedBialgebra& H);

/// Yang-Baxter on basis triples; informative only (the braided bialgebra
/// definition does not demand it).
Report verify_yang_baxter(const BraidedBialgebra& H);

Report verify_all(const BraidedBialgebra& H);

/// Throws with the first failing witness unless every check passes.
BraidedBialgebra make_verified(FDAlgebra alg, FDCoalgebra coalg, LinMap braid,
                               std::optional<LinMap> antipode);

/// Ordinary Hopf algebra of a finite group, with the flip braid.
BraidedBialgebra group_hopf_algebra(const FiniteGroup& G, const Field& fld);

/// The diagonal braid c_q(g x^i (x) h x^j) = q^(ij) h x^j (x) g x^i on a
/// basis indexed (g,i) -> g*n + i.
LinMap cq_braid(int gcount, int n, const CycNum& q);

} // namespace hdw
