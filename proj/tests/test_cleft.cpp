#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hdw/fixtures.hpp"

using namespace hdw;

namespace {

struct RegularSetup {
    HDAlgebra HD;
    AutContext ctx;
    CleftContext cc;
    CleftDatum d;
};

RegularSetup make_regular(int which) {
    Fixture fx = which == 0 ? fixture_first_example() : fixture_second_example();
    RegularSetup rs{build_HD(fx.datum, fx.fld), {}, {}, {}};
    rs.ctx = make_aut_context(rs.HD);
    ComoduleAlgebraData B = regular_comodalg(rs.HD, rs.ctx);
    rs.cc = make_cleft_context(B, rs.HD, rs.ctx);
    rs.cc.HD = &rs.HD;   // rebind: rs.HD owns the algebra now
    rs.cc.ctx = &rs.ctx;
    rs.d = regular_cleft_datum(rs.HD);
    return rs;
}

} // namespace

TEST_CASE("regular cleft datum validates on both worked examples") {
    for (int ex = 0; ex < 2; ++ex) {
        RegularSetup rs = make_regular(ex);
        REQUIRE(rs.cc.rep.ok());
        CHECK(rs.cc.C.dim() == 1); // coinvariants are k*1
        Report rep = validate_cleft_datum(rs.cc, rs.d);
        CHECK(rep.ok());
    }
}

TEST_CASE("gamma of the regular extension is the identity and inverts to S") {
    RegularSetup rs = make_regular(1);
    LinMap gamma = build_gamma(rs.cc, rs.d);
    CHECK(gamma == LinMap::identity(rs.HD.dim(), rs.HD.field()));
    LinMap ginv = gamma_inverse_closed(rs.cc, rs.d);
    CHECK(ginv == *rs.HD.H.antipode);
    // gamma(1) = 1, gamma^-1(gx) = -b_x b_gz^-1
    const FiniteGroup& G = rs.HD.group();
    Vec g1 = to_vec(gamma.column(rs.HD.bidx(G.identity, 0)), rs.HD.dim(), rs.HD.field());
    CHECK(vec_eq(g1, rs.cc.B.B.unit_vec()));
    Report rep = verify_gamma(rs.cc, gamma, ginv);
    CHECK(rep.ok());
}

TEST_CASE("gamma^-1 closed form at i=1 is -b_x b_gz^-1") {
    RegularSetup rs = make_regular(0);
    LinMap ginv = gamma_inverse_closed(rs.cc, rs.d);
    const FiniteGroup& G = rs.HD.group();
    const FDAlgebra& B = rs.cc.B.B;
    for (int g = 0; g < G.order; ++g) {
        Vec expect = vec_scale(-rs.HD.field()->one(),
                               B.mul_vec(rs.d.b_x, *element_inverse(
                                                       B, rs.d.b_g[G.mul(g, rs.HD.datum.z)])));
        CHECK(vec_eq(to_vec(ginv.column(rs.HD.bidx(g, 1)), rs.HD.dim(), rs.HD.field()), expect));
    }
}

TEST_CASE("broken data are rejected with witnesses") {
    RegularSetup rs = make_regular(1);
    SUBCASE("b_x scaled by 2 fails ladder(b_x) = 1") {
        CleftDatum d = rs.d;
        d.b_x = vec_scale(rs.HD.field()->from_int(2), d.b_x);
        Report rep = validate_cleft_datum(rs.cc, d);
        CHECK_FALSE(rep.ok());
        CHECK(rep.find("cleft-datum-bx-ladder-one")->status == Status::Fail);
    }
    SUBCASE("vanishing b_g fails invertibility") {
        CleftDatum d = rs.d;
        int g1 = rs.HD.group().generators[0];
        d.b_g[g1] = zero_vec(rs.HD.dim(), rs.HD.field());
        Report rep = validate_cleft_datum(rs.cc, d);
        CHECK_FALSE(rep.ok());
        const ReportEntry* e = rep.find("cleft-datum-bg-invertible");
        REQUIRE(e != nullptr);
        CHECK(e->status == Status::Fail);
        CHECK(e->witness == "(g=g1)");
    }
    SUBCASE("b_x moved off the z-component fails membership") {
        CleftDatum d = rs.d;
        d.b_x = unit_vec(rs.HD.dim(), rs.HD.bidx(rs.HD.group().identity, 2), rs.HD.field());
        Report rep = validate_cleft_datum(rs.cc, d);
        CHECK_FALSE(rep.ok());
        CHECK(rep.find("cleft-datum-bx-membership")->status == Status::Fail);
    }
}

TEST_CASE("weak action of the regular extension is trivial (C = k)") {
    for (int ex = 0; ex < 2; ++ex) {
        RegularSetup rs = make_regular(ex);
        LinMap gamma = build_gamma(rs.cc, rs.d);
        LinMap ginv = gamma_inverse_closed(rs.cc, rs.d);
        WeakAction wa = weak_action(rs.cc, gamma, ginv);
        CHECK(wa.rep.ok());
        // h -> 1 = eps(h) 1
        for (int a = 0; a < rs.HD.dim(); ++a) {
            TermVec col = wa.rho.column(a * 1 + 0);
            CycNum expect = rs.HD.H.coalg.counit[a];
            if (expect.is_zero())
                CHECK(col.empty());
            else {
                REQUIRE(col.size() == 1);
                CHECK(col[0].c == expect);
            }
        }
        Report cf = cross_check_weak_action_closed_form(rs.cc, rs.d, wa.rho);
        // closed-form action agrees everywhere on the regular extension
        CHECK(cf.find("closed-form-action-discrepancies")->value == "0");
    }
}

TEST_CASE("cocycle of the regular extension is trivial (eps (x) eps)") {
    for (int ex = 0; ex < 2; ++ex) {
        RegularSetup rs = make_regular(ex);
        LinMap gamma = build_gamma(rs.cc, rs.d);
        LinMap ginv = gamma_inverse_closed(rs.cc, rs.d);
        Cocycle co = cocycle(rs.cc, gamma, ginv);
        CHECK(co.rep.ok());
        int dH = rs.HD.dim();
        for (int a = 0; a < dH; ++a)
            for (int b = 0; b < dH; ++b) {
                TermVec col = co.sigma.column(a * dH + b);
                CycNum expect = rs.HD.H.coalg.counit[a] * rs.HD.H.coalg.counit[b];
                if (expect.is_zero())
                    CHECK(col.empty());
                else {
                    REQUIRE(col.size() == 1);
                    CHECK(col[0].c == expect);
                }
            }
        // in particular sigma(x^2 (x) x) = eps(x^2) eps(x) = 0
        if (rs.HD.n >= 3) {
            int x2 = rs.HD.bidx(rs.HD.group().identity, 2);
            int x1 = rs.HD.bidx(rs.HD.group().identity, 1);
            CHECK(co.sigma.column(x2 * dH + x1).empty());
        }
    }
}

TEST_CASE("closed-form cocycle cross-check reports discrepancies without failing") {
    RegularSetup rs = make_regular(1);
    LinMap gamma = build_gamma(rs.cc, rs.d);
    LinMap ginv = gamma_inverse_closed(rs.cc, rs.d);
    Cocycle co = cocycle(rs.cc, gamma, ginv);
    REQUIRE(co.rep.ok());
    Report cf = cross_check_cocycle_closed_form(rs.cc, rs.d, co.sigma);
    CHECK(cf.ok()); // informative entries only, plus the internal r=0 identity
    CHECK(cf.find("closed-form-r0-simplification")->status == Status::Pass);
    const ReportEntry* agree = cf.find("closed-form-cocycle-agreements");
    const ReportEntry* diff = cf.find("closed-form-cocycle-discrepancies");
    REQUIRE(agree != nullptr);
    REQUIRE(diff != nullptr);
    CHECK(std::stoi(agree->value) + std::stoi(diff->value) == rs.HD.dim() * rs.HD.dim());
    // the three-sum formula reproduces the definitional sigma on every cell
    // of the regular extension (the worry about it stemmed from the printed
    // x^3 = -2 slip); discrepancies would be reported, not failed
    CHECK(std::stoi(diff->value) == 0);
}

TEST_CASE("printed tables of the worked examples: agreements and known mismatches") {
    for (int ex = 0; ex < 2; ++ex) {
        RegularSetup rs = make_regular(ex);
        LinMap gamma = build_gamma(rs.cc, rs.d);
        LinMap ginv = gamma_inverse_closed(rs.cc, rs.d);
        WeakAction wa = weak_action(rs.cc, gamma, ginv);
        Cocycle co = cocycle(rs.cc, gamma, ginv);
        REQUIRE(wa.rep.ok());
        REQUIRE(co.rep.ok());
        Report tables = ex == 0
                            ? evaluate_printed_tables_first_example(rs.cc, rs.d, wa.rho, co.sigma)
                            : evaluate_printed_tables_second_example(rs.cc, rs.d, wa.rho, co.sigma);
        CHECK(tables.ok()); // informational only
        if (ex == 0) {
            // the first example's tables match the definitional maps exactly
            CHECK(tables.find("printed-action-table-discrepancies")->value == "0");
            CHECK(tables.find("printed-cocycle-table-discrepancies")->value == "0");
        } else {
            // the second example's printed tables carry defects (e.g. the
            // rho(g^i x^2) line and the sigma(g^i x^2 (x) g^j x) block)
            CHECK(std::stoi(tables.find("printed-action-table-discrepancies")->value) > 0);
            CHECK(std::stoi(tables.find("printed-cocycle-table-discrepancies")->value) > 0);
        }
    }
}

TEST_CASE("invariant elements") {
    for (int ex = 0; ex < 2; ++ex) {
        RegularSetup rs = make_regular(ex);
        InvariantElements inv = invariant_elements(rs.cc, rs.d);
        CHECK(inv.rep.ok());
        // a_1 = 1
        CHECK(vec_eq(inv.a_g[rs.HD.group().identity], rs.cc.B.B.unit_vec()));
        // regular datum: c_g = (xg - chi(g) gx) g^-1 z^-1 = 0
        for (int g = 0; g < rs.HD.gcount; ++g) CHECK(vec_is_zero(inv.c_g[g]));
        if (ex == 0) {
            // x^2 = 0 in the first example, so b = b_x^2 b_z^(|z|-2) = 0 lies in C
            CHECK(vec_is_zero(inv.b));
            CHECK(rs.cc.rep.ok());
        }
    }
}

TEST_CASE("crossed product from the trivial action and cocycle is the twisted tensor") {
    RegularSetup rs = make_regular(0);
    const Field& F = rs.HD.field();
    // A = k with trivial structure
    FDAlgebra A;
    A.fld = F;
    A.basis.labels = {"1"};
    A.mult = {TermVec{{0, F->one()}}};
    A.unit = {{0, F->one()}};
    int dH = rs.HD.dim();
    LinMap sA = flip_map(dH, 1, F);
    LinMap rho(1, dH * 1, F);
    for (int a = 0; a < dH; ++a) rho.at(0, a) = rs.HD.H.coalg.counit[a]; // eps (x) id
    LinMap sigma(1, dH * dH, F);
    for (int a = 0; a < dH; ++a)
        for (int b = 0; b < dH; ++b)
            sigma.at(0, a * dH + b) = rs.HD.H.coalg.counit[a] * rs.HD.H.coalg.counit[b];
    CrossedProductData cp{A, sA, rho, sigma};
    CrossedProduct xp = build_crossed_product(cp, rs.HD);
    CHECK(xp.rep.ok());
    // k # H recovers H itself as an algebra
    for (int a = 0; a < dH; ++a)
        for (int b = 0; b < dH; ++b) {
            TermVec expect = rs.HD.H.alg.mul(a, b);
            TermVec got = xp.AH.mul(a, b); // A-part index is always 0
            REQUIRE(got.size() == expect.size());
            for (size_t t = 0; t < got.size(); ++t) {
                CHECK(got[t].idx == expect[t].idx);
                CHECK(got[t].c == expect[t].c);
            }
        }
    // and the experimental diagram transcriptions hold for the valid pair
    Report diag = verify_diagram_conditions(cp, rs.HD);
    CHECK(diag.ok());
}

TEST_CASE("perturbing one sigma cell breaks associativity with a witness") {
    RegularSetup rs = make_regular(1);
    LinMap gamma = build_gamma(rs.cc, rs.d);
    LinMap ginv = gamma_inverse_closed(rs.cc, rs.d);
    Cocycle co = cocycle(rs.cc, gamma, ginv);
    REQUIRE(co.rep.ok());
    int dH = rs.HD.dim();
    int x1 = rs.HD.bidx(rs.HD.group().identity, 1);
    LinMap bad = co.sigma;
    bad.at(0, x1 * dH + x1) = bad.at(0, x1 * dH + x1) + rs.HD.field()->one();
    CrossedProductData cp{rs.cc.C.C, rs.cc.sC, /*rho=*/LinMap(1, dH, rs.HD.field()), bad};
    // rho for C = k is eps
    for (int a = 0; a < dH; ++a) cp.rho.at(0, a) = rs.HD.H.coalg.counit[a];
    CrossedProduct xp = build_crossed_product(cp, rs.HD);
    CHECK_FALSE(xp.rep.ok());
    const ReportEntry* e = xp.rep.find("crossed-product-associative");
    REQUIRE(e != nullptr);
    CHECK(e->status == Status::Fail);
    CHECK_FALSE(e->witness.empty());
    // the diagram transcription rejects the perturbed pair too
    Report diag = verify_diagram_conditions(cp, rs.HD);
    CHECK_FALSE(diag.ok());
}

TEST_CASE("normal basis and Galois map for the regular extensions") {
    for (int ex = 0; ex < 2; ++ex) {
        RegularSetup rs = make_regular(ex);
        LinMap gamma = build_gamma(rs.cc, rs.d);
        LinMap ginv = gamma_inverse_closed(rs.cc, rs.d);
        NormalBasis nb = normal_basis(rs.cc, gamma, ginv);
        CHECK(nb.rep.ok());
        // phi for the regular extension (C = k) is gamma itself
        CHECK(nb.phi == gamma);
        Report gal = galois_check(rs.cc, gamma);
        CHECK(gal.ok());
    }
}

TEST_CASE("round trip: crossed product of (rho, sigma) reproduces them") {
    for (int ex = 0; ex < 2; ++ex) {
        RegularSetup rs = make_regular(ex);
        LinMap gamma = build_gamma(rs.cc, rs.d);
        LinMap ginv = gamma_inverse_closed(rs.cc, rs.d);
        WeakAction wa = weak_action(rs.cc, gamma, ginv);
        Cocycle co = cocycle(rs.cc, gamma, ginv);
        REQUIRE(wa.rep.ok());
        REQUIRE(co.rep.ok());
        Report rt = round_trip_crossed_product(rs.cc, wa.rho, co.sigma);
        CHECK(rt.ok());
        if (!rt.ok()) MESSAGE(rt.to_text());
    }
}

TEST_CASE("k # H is isomorphic to H_D via phi(a (x) h) = i(a) gamma(h)") {
    RegularSetup rs = make_regular(1);
    LinMap gamma = build_gamma(rs.cc, rs.d);
    LinMap ginv = gamma_inverse_closed(rs.cc, rs.d);
    WeakAction wa = weak_action(rs.cc, gamma, ginv);
    Cocycle co = cocycle(rs.cc, gamma, ginv);
    CrossedProductData cp{rs.cc.C.C, rs.cc.sC, wa.rho, co.sigma};
    CrossedProduct xp = build_crossed_product(cp, rs.HD);
    REQUIRE(xp.rep.ok());
    // phi : A#H -> B, a#h -> i(a) gamma(h); as matrices with dC = 1 this is
    // gamma again, and multiplicativity is the algebra isomorphism claim
    int dH = rs.HD.dim();
    const FDAlgebra& B = rs.cc.B.B;
    LinMap phi(B.dim(), xp.AH.dim(), rs.HD.field());
    for (int a = 0; a < dH; ++a)
        phi.set_column(a, B.mul_vec(rs.cc.C.basis_in_B[0], to_vec(gamma.column(a), B.dim(),
                                                                 rs.HD.field())));
    CHECK(rank(phi) == B.dim()); // bijective
    for (int u = 0; u < xp.AH.dim(); ++u)
        for (int v = 0; v < xp.AH.dim(); ++v) {
            Vec lhs = phi.apply(to_vec(xp.AH.mul(u, v), xp.AH.dim(), rs.HD.field()));
            Vec rhs = B.mul_vec(to_vec(phi.column(u), B.dim(), rs.HD.field()),
                                to_vec(phi.column(v), B.dim(), rs.HD.field()));
            CHECK(vec_eq(lhs, rhs));
        }
}
