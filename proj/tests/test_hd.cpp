#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hdw/hd.hpp"

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

TEST_CASE("validate_datum_E") {
    auto F = CycField::make(6);
    FiniteGroup C6 = FiniteGroup::from_cyclic_factors({6});
    Character chi = Character::from_generator_exponents(C6, 6, {2});

    SUBCASE("U = 0 is always valid") {
        DatumE E{C6, chi, zero_vec(6, F), 3};
        CHECK(validate_datum_E(E, F).ok());
    }
    SUBCASE("the second worked datum: U = g^3 - 1") {
        Vec U = zero_vec(6, F);
        U[3] = F->one();
        U[0] = -F->one();
        DatumE E{C6, chi, U, 3};
        CHECK(validate_datum_E(E, F).ok());
    }
    SUBCASE("support outside ker(chi) is rejected with witness") {
        Vec U = zero_vec(6, F);
        U[1] = F->one(); // chi(g) = zeta^2 != 1
        DatumE E{C6, chi, U, 3};
        Report rep = validate_datum_E(E, F);
        CHECK_FALSE(rep.ok());
        const ReportEntry* e = rep.find("datum-E-support-kernel");
        REQUIRE(e != nullptr);
        CHECK(e->status == Status::Fail);
        CHECK(e->witness == "(g=g1)");
    }
}

TEST_CASE("B_E multiplication rules") {
    auto F = CycField::make(6);
    FiniteGroup C6 = FiniteGroup::from_cyclic_factors({6});
    Character chi = Character::from_generator_exponents(C6, 6, {2});
    Vec U = zero_vec(6, F);
    U[3] = F->one();
    U[0] = -F->one();
    DatumE E{C6, chi, U, 3};
    FDAlgebra B = build_BE(E, F);
    int n = 3;
    auto idx = [&](int g, int i) { return g * n + i; };
    // x^(n-1) * x = U
    Vec lhs = B.mul_vec(unit_vec(B.dim(), idx(0, 2), F), unit_vec(B.dim(), idx(0, 1), F));
    Vec expect = zero_vec(B.dim(), F);
    expect[idx(3, 0)] = F->one();
    expect[idx(0, 0)] = -F->one();
    CHECK(vec_eq(lhs, expect));
    // x*g = chi(g) g x
    Vec xg = B.mul_vec(unit_vec(B.dim(), idx(0, 1), F), unit_vec(B.dim(), idx(1, 0), F));
    Vec gx = zero_vec(B.dim(), F);
    gx[idx(1, 1)] = F->zeta(2);
    CHECK(vec_eq(xg, gx));
    // group algebra embedding: g*h = gh
    Vec gh = B.mul_vec(unit_vec(B.dim(), idx(1, 0), F), unit_vec(B.dim(), idx(4, 0), F));
    CHECK(vec_eq(gh, unit_vec(B.dim(), idx(5, 0), F)));
}

TEST_CASE("validate_datum_D") {
    auto F = CycField::make(6);
    FiniteGroup C6 = FiniteGroup::from_cyclic_factors({6});
    Character chi = Character::from_generator_exponents(C6, 6, {2});

    SUBCASE("second worked datum: n=3, p=xi") {
        DatumD D{C6, chi, C6.generators[0], F->one(), F->zeta(2)};
        DatumDInfo info;
        REQUIRE(validate_datum_D(D, F, &info).ok());
        CHECK(info.n == 3);
        CHECK(info.p == F->zeta(2));
        CHECK(info.qp == F->zeta(4));
        CHECK(info.U_nonzero);
    }
    SUBCASE("first worked datum: n=2, p=-1") {
        auto F2 = CycField::make(2);
        FiniteGroup G = FiniteGroup::from_cyclic_factors({2, 2, 2});
        Character chi2 = Character::from_generator_exponents(G, 2, {1, 1, 1});
        int z = G.mul(G.mul(G.generators[0], G.generators[1]), G.generators[2]);
        DatumD D{G, chi2, z, F2->one(), F2->one()};
        DatumDInfo info;
        REQUIRE(validate_datum_D(D, F2, &info).ok());
        CHECK(info.n == 2);
        CHECK(info.p == F2->from_int(-1));
        CHECK_FALSE(info.U_nonzero); // z^2 = 1
        CHECK(info.lambda.is_zero());
    }
    SUBCASE("q chi(z) of order 1 is rejected") {
        FiniteGroup C2 = FiniteGroup::from_cyclic_factors({2});
        auto F2 = CycField::make(2);
        DatumD D{C2, Character::trivial(C2, 2), C2.identity, F2->zero(), F2->one()};
        Report rep = validate_datum_D(D, F2);
        CHECK_FALSE(rep.ok());
        REQUIRE(rep.find("datum-D-n-greater-1") != nullptr);
        CHECK(rep.find("datum-D-n-greater-1")->status == Status::Fail);
    }
    SUBCASE("non-central z is rejected") {
        auto F2 = CycField::make(2);
        FiniteGroup S3 = symmetric_group(3);
        int transposition = -1;
        for (int g = 0; g < 6; ++g)
            if (S3.element_order(g) == 2) { transposition = g; break; }
        DatumD D{S3, Character::trivial(S3, 2), transposition, F2->zero(), F2->from_int(-1)};
        Report rep = validate_datum_D(D, F2);
        CHECK_FALSE(rep.ok());
        REQUIRE(rep.find("datum-D-z-central") != nullptr);
        CHECK(rep.find("datum-D-z-central")->status == Status::Fail);
    }
}

TEST_CASE("H_D of the first worked example") {
    HDAlgebra HD = example1();
    CHECK(HD.dim() == 16);
    CHECK(HD.n == 2);
    // construction already verified; spot-check S(x) = -x z^{-1} normal-formed
    const FiniteGroup& G = HD.group();
    int x = HD.bidx(G.identity, 1);
    Vec Sx = HD.H.antipode->column(x).empty() ? zero_vec(16, HD.field())
                                              : to_vec(HD.H.antipode->column(x), 16, HD.field());
    // -x z^{-1} = -chi(z) z x = z x (chi(z) = -1)
    Vec expect = zero_vec(16, HD.field());
    expect[HD.bidx(HD.datum.z, 1)] = HD.field()->one();
    CHECK(vec_eq(Sx, expect));
    // S(g) = g^{-1} = g
    for (int g = 0; g < G.order; ++g) {
        auto col = HD.H.antipode->column(HD.bidx(g, 0));
        REQUIRE(col.size() == 1);
        CHECK(col[0].idx == HD.bidx(G.inv(g), 0));
        CHECK(col[0].c.is_one());
    }
    // S^2(g x^i) = q^{i(i-1)} p^{-i} g x^i
    LinMap S2 = compose(*HD.H.antipode, *HD.H.antipode);
    for (int g = 0; g < G.order; ++g)
        for (int i = 0; i < HD.n; ++i) {
            CycNum scal = HD.datum.q.pow((long long)i * (i - 1)) * HD.info.p.pow(-i);
            auto col = S2.column(HD.bidx(g, i));
            REQUIRE(col.size() == 1);
            CHECK(col[0].idx == HD.bidx(g, i));
            CHECK(col[0].c == scal);
        }
}

TEST_CASE("H_D of the second worked example") {
    HDAlgebra HD = example2();
    const Field& F = HD.field();
    CHECK(HD.dim() == 18);
    CHECK(HD.n == 3);
    const FiniteGroup& G = HD.group();
    int x = HD.bidx(G.identity, 1);
    // x^3 = lambda (z^3 - 1) = g^3 - 1 (the printed "= -2" conflates the
    // grouplike g^3 with a scalar; a grouplike cannot equal -1)
    Vec x3 = HD.H.alg.power(unit_vec(18, x, F), 3);
    Vec u = zero_vec(18, F);
    u[HD.bidx(G.pow(G.generators[0], 3), 0)] = F->one();
    u[HD.bidx(G.identity, 0)] = -F->one();
    CHECK(vec_eq(x3, u));
    // same thing straight from the validated datum's radical element
    Vec uk = zero_vec(18, F);
    for (int g = 0; g < 6; ++g) uk[HD.bidx(g, 0)] = HD.info.U[g];
    CHECK(vec_eq(x3, uk));
    // Delta(x^2) = 1 (x) x^2 + (1+xi^2) x (x) gx + x^2 (x) g^2, via the
    // twisted tensor square of Delta(x) as the independent route
    LinMap cq = HD.H.braid;
    FDAlgebra HcH = twisted_tensor_algebra(HD.H.alg, HD.H.alg, cq);
    int d = 18;
    auto dx = HD.H.coalg.comult[x];
    Vec dxv = zero_vec(d * d, F);
    for (const auto& p : dx) dxv[p.a * d + p.b] = dxv[p.a * d + p.b] + p.c;
    Vec dx2 = HcH.mul_vec(dxv, dxv);
    Vec expect = zero_vec(d * d, F);
    int x2 = HD.bidx(G.identity, 2);
    int gx = HD.bidx(G.generators[0], 1);
    int g2 = HD.bidx(G.pow(G.generators[0], 2), 0);
    int one = HD.bidx(G.identity, 0);
    expect[one * d + x2] = F->one();
    expect[x * d + gx] = F->one() + F->zeta(4); // 1 + xi^2, xi = zeta(2)
    expect[x2 * d + g2] = F->one();
    CHECK(vec_eq(dx2, expect));
    // and equals Delta(x^2) from the built structure
    Vec built = zero_vec(d * d, F);
    for (const auto& p : HD.H.coalg.comult[x2]) built[p.a * d + p.b] = built[p.a * d + p.b] + p.c;
    CHECK(vec_eq(built, expect));
    // eps(g x^i) = delta_{i,0}
    for (int g = 0; g < G.order; ++g)
        for (int i = 0; i < HD.n; ++i)
            CHECK(HD.H.coalg.counit[HD.bidx(g, i)] == (i == 0 ? F->one() : F->zero()));
    // x is a zero divisor, not invertible: x * x^2 (g^3 + 1) = g^6 - 1 = 0
    Vec annih = zero_vec(18, F);
    annih[HD.bidx(G.pow(G.generators[0], 3), 2)] = F->one();
    annih[x2] = F->one();
    CHECK(vec_is_zero(HD.H.alg.mul_vec(unit_vec(18, x, F), annih)));
    CHECK_FALSE(element_inverse(HD.H.alg, unit_vec(18, x, F)).has_value());
    // (were x^3 the scalar -2, -x^2/2 would invert x; the linear solve
    // refutes that reading: x * (-x^2/2) = (1 - g^3)/2 != 1)
    Vec cand = zero_vec(18, F);
    cand[x2] = F->from_rational(Rational(-1, 2));
    Vec prod = HD.H.alg.mul_vec(unit_vec(18, x, F), cand);
    CHECK_FALSE(vec_eq(prod, HD.H.alg.unit_vec()));
    // g inverts to g^5
    Vec g1 = unit_vec(18, HD.bidx(G.generators[0], 0), F);
    auto ginv = element_inverse(HD.H.alg, g1);
    REQUIRE(ginv.has_value());
    CHECK(vec_eq(*ginv, unit_vec(18, HD.bidx(G.pow(G.generators[0], 5), 0), F)));
}

TEST_CASE("q-binomial formula inside the twisted tensor square") {
    // (1 (x) x + x (x) z)^i = sum_j binom(i,j)_{qp} x^j (x) z^j x^{i-j}
    for (int ex = 0; ex < 2; ++ex) {
        HDAlgebra HD = ex == 0 ? example1() : example2();
        const Field& F = HD.field();
        const FiniteGroup& G = HD.group();
        int d = HD.dim();
        FDAlgebra HcH = twisted_tensor_algebra(HD.H.alg, HD.H.alg, HD.H.braid);
        Vec w = zero_vec(d * d, F);
        int one = HD.bidx(G.identity, 0), x = HD.bidx(G.identity, 1);
        int z0 = HD.bidx(HD.datum.z, 0);
        w[one * d + x] = F->one();
        w[x * d + z0] = F->one();
        for (int i = 0; i < HD.n; ++i) {
            Vec lhs = HcH.power(w, i);
            Vec rhs = zero_vec(d * d, F);
            for (int j = 0; j <= i; ++j) {
                int zj = G.pow(HD.datum.z, j);
                rhs[HD.bidx(G.identity, j) * d + HD.bidx(zj, i - j)] = gauss_binom(i, j, HD.info.qp);
            }
            CHECK(vec_eq(lhs, rhs));
        }
        // binom(n,j)_{qp} = 0 for 0 < j < n
        for (int j = 1; j < HD.n; ++j) CHECK(gauss_binom(HD.n, j, HD.info.qp).is_zero());
    }
}

TEST_CASE("taft algebras") {
    for (int n = 2; n <= 5; ++n) {
        auto F = CycField::make((int)lcm_ll(2, n));
        CycNum xi = F->zeta(F->m() / n);
        HDAlgebra T = taft(n, xi);
        CHECK(T.dim() == n * n);
        CHECK(T.n == n);
        const FiniteGroup& G = T.group();
        // x^n = 0
        Vec xn = T.H.alg.power(unit_vec(T.dim(), T.bidx(G.identity, 1), F), n);
        CHECK(vec_is_zero(xn));
        // braid is the flip (q = 1)
        CHECK(T.H.braid == flip_map(T.dim(), T.dim(), F));
        // S(x) = -x g^{-1} normal-formed into the g^{-1} x basis direction
        auto Sx = T.H.antipode->column(T.bidx(G.identity, 1));
        REQUIRE(Sx.size() == 1);
        CHECK(Sx[0].idx == T.bidx(G.inv(G.generators[0]), 1));
        CHECK(Sx[0].c == -xi.inv()); // -chi(g^{-1}) g^{-1} x
    }
    auto F6 = CycField::make(6);
    CHECK_THROWS_AS(taft(3, F6->zeta(1)), std::invalid_argument); // order 6, not 3
}

TEST_CASE("dim(H_D) = n |G| and the (p,q) exclusion flag") {
    HDAlgebra HD1 = example1();
    CHECK(HD1.dim() == HD1.n * HD1.group().order);
    CHECK_FALSE(HD1.pq_excluded()); // p = -1, q = 1
    HDAlgebra HD2 = example2();
    CHECK(HD2.dim() == HD2.n * HD2.group().order);
    CHECK_FALSE(HD2.pq_excluded());
    // the excluded case: trivial character (p=1), q = -1 on C2, lambda = 0
    auto F = CycField::make(2);
    FiniteGroup C2 = FiniteGroup::from_cyclic_factors({2});
    DatumD D{C2, Character::trivial(C2, 2), C2.generators[0], F->zero(), F->from_int(-1)};
    HDAlgebra HD3 = build_HD(D, F); // H_D itself exists
    CHECK(HD3.pq_excluded());
}
