#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hdw/comodule.hpp"

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

TEST_CASE("one-dimensional trivial space gives the flip") {
    HDAlgebra HD = example2();
    AutContext ctx = make_aut_context(HD);
    REQUIRE(ctx.count() == 1);
    HDSpaceData V;
    V.basis.labels = {"v"};
    V.deg_aut = {ctx.id_index};
    V.alpha = LinMap::identity(1, HD.field());
    auto [s, rep] = build_transposition(V, HD, ctx);
    CHECK(rep.ok());
    CHECK(s == flip_map(HD.dim(), 1, HD.field()));
}

TEST_CASE("regular space of the second example gives the braid c_q") {
    HDAlgebra HD = example2();
    AutContext ctx = make_aut_context(HD);
    HDSpaceData V;
    V.basis = HD.H.basis();
    V.deg_aut.assign(HD.dim(), ctx.id_index);
    V.alpha = LinMap(HD.dim(), HD.dim(), HD.field());
    for (int g = 0; g < HD.gcount; ++g)
        for (int i = 0; i < HD.n; ++i)
            V.alpha.at(HD.bidx(g, i), HD.bidx(g, i)) = HD.datum.q.pow(i);
    auto [s, rep] = build_transposition(V, HD, ctx);
    CHECK(rep.ok());
    CHECK(s == HD.H.braid);
}

TEST_CASE("non-component-preserving alpha is rejected") {
    HDAlgebra HD = example1();
    AutContext ctx = make_aut_context(HD);
    REQUIRE(ctx.count() == 6);
    HDSpaceData V;
    V.basis.labels = {"v0", "v1"};
    V.deg_aut = {ctx.id_index, (ctx.id_index + 1) % 6};
    V.alpha = LinMap(2, 2, HD.field());
    V.alpha.at(1, 0) = HD.field()->one(); // crosses components
    V.alpha.at(0, 1) = HD.field()->one();
    Report rep = validate_space_data(V, HD, ctx);
    CHECK_FALSE(rep.ok());
    CHECK(rep.find("space-alpha-component-preserving")->status == Status::Fail);
}

TEST_CASE("kG-space from a gradation") {
    auto F = CycField::make(3);
    SUBCASE("trivial gradation is the flip") {
        FiniteGroup C2 = FiniteGroup::from_cyclic_factors({2});
        GroupAutomorphism id{{0, 1}};
        auto [s, rep] = kG_space_from_gradation(C2, {id, id, id}, F);
        CHECK(rep.ok());
        CHECK(s == flip_map(2, 3, F));
    }
    SUBCASE("C3 with the inversion automorphism") {
        FiniteGroup C3 = FiniteGroup::from_cyclic_factors({3});
        GroupAutomorphism id{{0, 1, 2}};
        GroupAutomorphism inv{{0, 2, 1}};
        REQUIRE(is_automorphism(C3, inv));
        auto [s, rep] = kG_space_from_gradation(C3, {id, inv}, F);
        CHECK(rep.ok());
        // s(g (x) v1) = v1 (x) g^2
        Vec in = zero_vec(3 * 2, F);
        in[1 * 2 + 1] = F->one();
        Vec outv = s.apply(in);
        Vec expect = zero_vec(2 * 3, F);
        expect[1 * 3 + 2] = F->one();
        CHECK(vec_eq(outv, expect));
    }
    SUBCASE("a non-multiplicative assignment fails the composition rule") {
        FiniteGroup C3 = FiniteGroup::from_cyclic_factors({3});
        // s(g^k (x) v) = v (x) g^(2k mod 3) is the inversion map (fine), but
        // wire a raw s that sends g -> g while g^2 -> g: not of the form zeta
        LinMap s(1 * 3, 3 * 1, F);
        s.at(0 * 3 + 0, 0 * 1 + 0) = F->one(); // 1 -> 1
        s.at(0 * 3 + 1, 1 * 1 + 0) = F->one(); // g -> g
        s.at(0 * 3 + 1, 2 * 1 + 0) = F->one(); // g^2 -> g
        Report rep = verify_kG_space(s, C3, 1, F);
        CHECK_FALSE(rep.ok());
    }
}

TEST_CASE("regular comodule: coaction equals comultiplication") {
    for (int ex = 0; ex < 2; ++ex) {
        HDAlgebra HD = ex == 0 ? example1() : example2();
        AutContext ctx = make_aut_context(HD);
        HDComoduleData V = regular_comodule(HD, ctx);
        ComoduleBuilt built = build_coaction(V, HD, ctx);
        CHECK(built.rep.ok());
        // nu = Delta entrywise
        int d = HD.dim();
        LinMap delta(d * d, d, HD.field());
        for (int u = 0; u < d; ++u) {
            TermVec col;
            for (const auto& p : HD.H.coalg.comult[u]) col.push_back({p.a * d + p.b, p.c});
            delta.set_column(u, normalize_terms(std::move(col)));
        }
        CHECK(built.nu == delta);
        // s = c_q
        CHECK(built.s == HD.H.braid);
    }
}

TEST_CASE("regular comodule: ladder and alpha q-commute, checked independently") {
    HDAlgebra HD = example2();
    AutContext ctx = make_aut_context(HD);
    HDComoduleData V = regular_comodule(HD, ctx);
    LinMap la = compose(V.ladder, V.alpha);
    LinMap al = compose(V.alpha, V.ladder);
    for (auto& x : al.a) x = HD.datum.q * x;
    CHECK(la == al);
}

TEST_CASE("coinvariants") {
    SUBCASE("regular comodule has coinvariants k*1") {
        for (int ex = 0; ex < 2; ++ex) {
            HDAlgebra HD = ex == 0 ? example1() : example2();
            AutContext ctx = make_aut_context(HD);
            HDComoduleData V = regular_comodule(HD, ctx);
            Coinvariants C = coinvariants(V, HD, ctx);
            CHECK(C.rep.ok());
            REQUIRE(C.basis.size() == 1);
            Vec e1 = unit_vec(HD.dim(), HD.bidx(HD.group().identity, 0), HD.field());
            CHECK(coords_in_span(C.basis, e1, HD.field()).has_value());
        }
    }
    SUBCASE("zero ladder, all degrees (1,id): everything coinvariant") {
        HDAlgebra HD = example2();
        AutContext ctx = make_aut_context(HD);
        HDComoduleData V;
        V.basis.labels = {"v0", "v1"};
        V.deg_g = {HD.group().identity, HD.group().identity};
        V.deg_aut = {ctx.id_index, ctx.id_index};
        V.alpha = LinMap::identity(2, HD.field());
        V.ladder = LinMap(2, 2, HD.field());
        Coinvariants C = coinvariants(V, HD, ctx);
        CHECK(C.rep.ok());
        CHECK(C.basis.size() == 2);
    }
    SUBCASE("zero ladder, degree g0 != 1: no coinvariants") {
        HDAlgebra HD = example2();
        AutContext ctx = make_aut_context(HD);
        HDComoduleData V;
        V.basis.labels = {"v0"};
        V.deg_g = {HD.group().generators[0]};
        V.deg_aut = {ctx.id_index};
        V.alpha = LinMap::identity(1, HD.field());
        V.ladder = LinMap(1, 1, HD.field());
        Coinvariants C = coinvariants(V, HD, ctx);
        CHECK(C.rep.ok());
        CHECK(C.basis.empty());
    }
}

TEST_CASE("U-family of the regular comodule") {
    for (int ex = 0; ex < 2; ++ex) {
        HDAlgebra HD = ex == 0 ? example1() : example2();
        AutContext ctx = make_aut_context(HD);
        HDComoduleData V = regular_comodule(HD, ctx);
        UFamily fam = derive_U_family(V, HD, ctx);
        CHECK(fam.rep.ok());
    }
}

TEST_CASE("U-family with zero ladder") {
    HDAlgebra HD = example2();
    AutContext ctx = make_aut_context(HD);
    HDComoduleData V;
    V.basis.labels = {"v0", "v1"};
    V.deg_g = {0, 3};
    V.deg_aut = {ctx.id_index, ctx.id_index};
    V.alpha = LinMap::identity(2, HD.field());
    V.ladder = LinMap(2, 2, HD.field());
    UFamily fam = derive_U_family(V, HD, ctx);
    CHECK(fam.rep.ok());
    for (int g = 0; g < 6; ++g)
        for (int i = 1; i < 3; ++i) CHECK(map_is_zero(fam.U[g][i]));
}

TEST_CASE("data violating ladder-alpha commutation is rejected") {
    HDAlgebra HD = example2();
    AutContext ctx = make_aut_context(HD);
    HDComoduleData V = regular_comodule(HD, ctx);
    // drop the q-weighting of alpha: alpha = id makes ladder o alpha != q alpha o ladder
    V.alpha = LinMap::identity(HD.dim(), HD.field());
    Report rep = validate_comodule_data(V, HD, ctx);
    CHECK_FALSE(rep.ok());
    CHECK(rep.find("comodule-ladder-alpha-commutation")->status == Status::Fail);
}

TEST_CASE("n=2 comodule with ladder^2 != 0 fails item 5") {
    HDAlgebra HD = example1(); // n = 2
    AutContext ctx = make_aut_context(HD);
    const Field& F = HD.field();
    const FiniteGroup& G = HD.group();
    HDComoduleData V;
    V.basis.labels = {"v0", "v1", "v2"};
    int z = HD.datum.z;
    // ladder shifts degree by z^{-1}; with z^2 = 1 the chain v0->v1->v2 stays
    // degree-consistent even though ladder^2 != 0
    V.deg_g = {G.mul(z, z), z, G.identity};
    V.deg_aut = {ctx.id_index, ctx.id_index, ctx.id_index};
    V.alpha = LinMap::identity(3, F);
    V.ladder = LinMap(3, 3, F);
    V.ladder.at(1, 0) = F->one(); // v0 -> v1
    V.ladder.at(2, 1) = F->one(); // v1 -> v2, so ladder^2 != 0 while n = 2
    Report rep = validate_comodule_data(V, HD, ctx);
    CHECK_FALSE(rep.ok());
    CHECK(rep.find("comodule-ladder-nilpotent")->status == Status::Fail);
    // the same defect seen through the family: item (5) fails when the
    // nilpotency check is skipped, so build the family pieces directly
    UFamily fam;
    fam.U.assign(G.order, std::vector<LinMap>(HD.n, LinMap::zero(3, 3, F)));
    for (int g = 0; g < G.order; ++g)
        for (int u = 0; u < 3; ++u)
            if (V.deg_g[u] == g) fam.U[g][0].at(u, u) = F->one();
    for (int g = 0; g < G.order; ++g) {
        int gz = G.mul(g, z);
        fam.U[g][1] = compose(fam.U[g][0], compose(V.ladder, fam.U[gz][0]));
    }
    bool item5_holds = true;
    for (int g = 0; g < G.order; ++g) {
        LinMap chain = fam.U[g][1];
        for (int k = 1; k < HD.n; ++k) chain = compose(chain, fam.U[G.mul(g, G.pow(z, k))][1]);
        if (!map_is_zero(chain)) item5_holds = false;
    }
    CHECK_FALSE(item5_holds);
}

TEST_CASE("comodule data recovered from maps") {
    HDAlgebra HD = example2();
    AutContext ctx = make_aut_context(HD);
    HDComoduleData V = regular_comodule(HD, ctx);
    ComoduleBuilt built = build_coaction(V, HD, ctx);
    REQUIRE(built.rep.ok());
    auto [V2, rep] = comodule_data_from_maps(V.basis, built.s, built.nu, HD, ctx);
    CHECK(rep.ok());
    CHECK(V2.deg_g == V.deg_g);
    CHECK(V2.deg_aut == V.deg_aut);
    CHECK(V2.alpha == V.alpha);
    CHECK(V2.ladder == V.ladder);
}

TEST_CASE("the excluded (p,q) = (1,-1) case is rejected with the explicit error") {
    auto F = CycField::make(2);
    FiniteGroup C2 = FiniteGroup::from_cyclic_factors({2});
    DatumD D{C2, Character::trivial(C2, 2), C2.generators[0], F->zero(), F->from_int(-1)};
    HDAlgebra HD = build_HD(D, F);
    REQUIRE(HD.pq_excluded());
    AutContext ctx = make_aut_context(HD);
    HDComoduleData V;
    V.basis.labels = {"v"};
    V.deg_g = {C2.identity};
    V.deg_aut = {ctx.id_index};
    V.alpha = LinMap::identity(1, F);
    V.ladder = LinMap(1, 1, F);
    Report rep = validate_comodule_data(V, HD, ctx);
    CHECK_FALSE(rep.ok());
    CHECK(rep.find("pq-supported")->value == "unsupported (p,q)=(1,-1)");
}
