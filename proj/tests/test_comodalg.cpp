#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hdw/braided.hpp"
#include "hdw/comodalg.hpp"

using namespace hdw;

namespace {

HDAlgebra example1() {
    auto F = CycField::make(2);
    FiniteGroup G = FiniteGroup::from_cyclic_factors({2, 2, 2});
    Character chi = Character::from_generator_exponents(G, 2, {1, 1, 1});
    int z = G.mul(G.mul(G.generators[0], G.generators[1]), G.generators[2]);
    DatumD D{G, chi, z, F->one(), F->one()};
    return build_HD(D, F);
}

HDAlgebra example2() {
    auto F = CycField::make(6);
    FiniteGroup G = FiniteGroup::from_cyclic_factors({6});
    Character chi = Character::from_generator_exponents(G, 6, {2});
    DatumD D{G, chi, G.generators[0], F->one(), F->zeta(2)};
    return build_HD(D, F);
}

} // namespace

TEST_CASE("regular comodule algebra validates and builds, both examples") {
    for (int ex = 0; ex < 2; ++ex) {
        HDAlgebra HD = ex == 0 ? example1() : example2();
        AutContext ctx = make_aut_context(HD);
        ComoduleAlgebraData B = regular_comodalg(HD, ctx);
        ComodAlgBuilt built = build_comodule_algebra(B, HD, ctx);
        CHECK(built.rep.ok());
        // nu = Delta
        int d = HD.dim();
        LinMap delta(d * d, d, HD.field());
        for (int u = 0; u < d; ++u) {
            TermVec col;
            for (const auto& p : HD.H.coalg.comult[u]) col.push_back({p.a * d + p.b, p.c});
            delta.set_column(u, normalize_terms(std::move(col)));
        }
        CHECK(built.nu == delta);
    }
}

TEST_CASE("kG with trivial coaction data is a valid comodule algebra") {
    HDAlgebra HD = example2();
    AutContext ctx = make_aut_context(HD);
    const Field& F = HD.field();
    FDAlgebra kG = group_hopf_algebra(HD.group(), F).alg;
    ComoduleAlgebraData B;
    B.B = kG;
    B.deg_g.resize(kG.dim());
    for (int g = 0; g < kG.dim(); ++g) B.deg_g[g] = g; // nu(g) = g (x) g
    B.deg_aut.assign(kG.dim(), ctx.id_index);
    B.alpha = LinMap::identity(kG.dim(), F);
    B.ladder = LinMap(kG.dim(), kG.dim(), F);
    ComodAlgBuilt built = build_comodule_algebra(B, HD, ctx);
    CHECK(built.rep.ok());
    InducedSubalgebra sub = induced_kG_subalgebra(B, HD, ctx);
    CHECK(sub.rep.ok());
    CHECK(sub.basis.size() == (size_t)kG.dim()); // ladder = 0: B_G = B
}

TEST_CASE("algebra gradation case: any G(chi,z)^op-graded algebra with alpha=id, ladder=0") {
    // example-1 shaped: lambda (z^n - 1) = 0, so case (1) applies and the
    // requirement is exactly an algebra gradation
    HDAlgebra HD = example1();
    AutContext ctx = make_aut_context(HD);
    REQUIRE_FALSE(HD.info.U_nonzero);
    const Field& F = HD.field();
    FDAlgebra kG = group_hopf_algebra(HD.group(), F).alg;
    ComoduleAlgebraData B;
    B.B = kG;
    B.deg_g.resize(kG.dim());
    for (int g = 0; g < kG.dim(); ++g) B.deg_g[g] = g;
    B.deg_aut.assign(kG.dim(), ctx.id_index);
    B.alpha = LinMap::identity(kG.dim(), F);
    B.ladder = LinMap(kG.dim(), kG.dim(), F);
    SUBCASE("valid gradation passes") {
        CHECK(validate_comodalg(B, HD, ctx).ok());
    }
    SUBCASE("breaking the gradation fails case (1)") {
        B.deg_g[HD.group().generators[0]] = HD.group().identity; // wrong degree
        Report rep = validate_comodalg(B, HD, ctx);
        CHECK_FALSE(rep.ok());
        CHECK(rep.find("comodalg-algebra-gradation")->status == Status::Fail);
    }
}

TEST_CASE("lower-component formula is exercised in the second example") {
    // x^(n-1) * x lands entirely in the z^-n-shifted component, which is what
    // the displayed formula has to reproduce
    HDAlgebra HD = example2();
    AutContext ctx = make_aut_context(HD);
    REQUIRE(HD.info.U_nonzero);
    ComoduleAlgebraData B = regular_comodalg(HD, ctx);
    Report rep = validate_comodalg(B, HD, ctx);
    CHECK(rep.ok());
    REQUIRE(rep.find("comodalg-lower-component-formula") != nullptr);
    CHECK(rep.find("comodalg-lower-component-formula")->status == Status::Pass);
}

TEST_CASE("ladder missing its weights breaks the Leibniz rule with witness (x, x)") {
    HDAlgebra HD = example2();
    AutContext ctx = make_aut_context(HD);
    ComoduleAlgebraData B = regular_comodalg(HD, ctx);
    // unweighted shift: ladder(g x^i) = g x^(i-1) instead of (i)_{qp} g x^(i-1)
    const Field& F = HD.field();
    B.ladder = LinMap(HD.dim(), HD.dim(), F);
    for (int g = 0; g < HD.gcount; ++g)
        for (int i = 1; i < HD.n; ++i) B.ladder.at(HD.bidx(g, i - 1), HD.bidx(g, i)) = F->one();
    Report rep = validate_comodalg(B, HD, ctx);
    CHECK_FALSE(rep.ok());
    const ReportEntry* e = rep.find("comodalg-twisted-leibniz");
    if (e == nullptr) {
        // an earlier stage may catch it first; Leibniz must be reached only
        // when the earlier stages pass, so force the check order statement:
        FAIL("twisted-leibniz stage not reached");
    } else {
        CHECK(e->status == Status::Fail);
        CHECK(e->witness == "(x, x)");
    }
}

TEST_CASE("induced kG-subalgebra of the regular comodule algebra is kG") {
    for (int ex = 0; ex < 2; ++ex) {
        HDAlgebra HD = ex == 0 ? example1() : example2();
        AutContext ctx = make_aut_context(HD);
        ComoduleAlgebraData B = regular_comodalg(HD, ctx);
        InducedSubalgebra sub = induced_kG_subalgebra(B, HD, ctx);
        CHECK(sub.rep.ok());
        CHECK(sub.basis.size() == (size_t)HD.gcount);
        // spanned exactly by the group part
        for (int g = 0; g < HD.gcount; ++g) {
            Vec e = unit_vec(HD.dim(), HD.bidx(g, 0), HD.field());
            CHECK(coords_in_span(sub.basis, e, HD.field()).has_value());
        }
    }
}

TEST_CASE("comodule-algebra data recovered from maps") {
    HDAlgebra HD = example1();
    AutContext ctx = make_aut_context(HD);
    ComoduleAlgebraData B = regular_comodalg(HD, ctx);
    ComodAlgBuilt built = build_comodule_algebra(B, HD, ctx);
    REQUIRE(built.rep.ok());
    auto [B2, rep] = comodalg_data_from_maps(B.B, built.s, built.nu, HD, ctx);
    CHECK(rep.ok());
    CHECK(B2.deg_g == B.deg_g);
    CHECK(B2.deg_aut == B.deg_aut);
    CHECK(B2.alpha == B.alpha);
    CHECK(B2.ladder == B.ladder);
}
