#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "hdw/braided.hpp"
#include "hdw/tensor.hpp"

using namespace hdw;

namespace {

FDAlgebra group_algebra(const FiniteGroup& G, const Field& F) {
    return group_hopf_algebra(G, F).alg;
}

FDCoalgebra group_coalgebra(const FiniteGroup& G, const Field& F) {
    return group_hopf_algebra(G, F).coalg;
}

} // namespace

TEST_CASE("kronecker maps") {
    auto F = CycField::make(6);
    LinMap id2 = LinMap::identity(2, F);
    LinMap id3 = LinMap::identity(3, F);
    CHECK(tensor_map(id2, id3) == LinMap::identity(6, F));
    LinMap fl = flip_map(2, 3, F);
    // apply(flip, e_a (x) e_b) = e_b (x) e_a
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 3; ++b) {
            Vec v = unit_vec(6, a * 3 + b, F);
            Vec w = fl.apply(v);
            CHECK(vec_eq(w, unit_vec(6, b * 2 + a, F)));
        }
    // compose(f, id) = f
    LinMap f(3, 3, F);
    f.at(0, 1) = F->zeta(1);
    f.at(2, 0) = F->from_int(7);
    CHECK(compose(f, id3) == f);
    CHECK(compose(id3, f) == f);
}

TEST_CASE("kronecker compatibility on random vectors") {
    auto F = CycField::make(4);
    std::mt19937 rng(7);
    auto rnd_vec = [&](int d) {
        Vec v = zero_vec(d, F);
        for (auto& x : v) x = F->from_int((long long)(rng() % 7) - 3);
        return v;
    };
    auto rnd_map = [&](int r, int c) {
        LinMap m(r, c, F);
        for (auto& x : m.a) x = F->from_int((long long)(rng() % 5) - 2);
        return m;
    };
    for (int iter = 0; iter < 25; ++iter) {
        LinMap f = rnd_map(3, 2), g = rnd_map(2, 4);
        Vec v = rnd_vec(2), w = rnd_vec(4);
        Vec vw(2 * 4, F->zero());
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 4; ++j) vw[i * 4 + j] = v[i] * w[j];
        Vec lhs = tensor_map(f, g).apply(vw);
        Vec fv = f.apply(v), gw = g.apply(w);
        Vec rhs(3 * 2, F->zero());
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 2; ++j) rhs[i * 2 + j] = fv[i] * gw[j];
        CHECK(vec_eq(lhs, rhs));
    }
}

TEST_CASE("rank, solve, nullspace, inverse") {
    auto F = CycField::make(3);
    LinMap A(3, 3, F);
    // [[1, z, 0], [0, 1, 1], [1, z, 0]] -> rank 2
    A.at(0, 0) = F->one(); A.at(0, 1) = F->zeta(1);
    A.at(1, 1) = F->one(); A.at(1, 2) = F->one();
    A.at(2, 0) = F->one(); A.at(2, 1) = F->zeta(1);
    CHECK(rank(A) == 2);
    CHECK(nullspace(A).size() == 1);
    Vec b = {F->one(), F->zero(), F->one()};
    auto x = solve(A, b);
    REQUIRE(x.has_value());
    CHECK(vec_eq(A.apply(*x), b));
    Vec bad = {F->one(), F->zero(), F->zero()};
    CHECK_FALSE(solve(A, bad).has_value());
    CHECK_FALSE(inverse_map(A).has_value());
    LinMap I = LinMap::identity(3, F);
    auto inv = inverse_map(I);
    REQUIRE(inv.has_value());
    CHECK(*inv == I);
}

TEST_CASE("twisted tensor with flip is the ordinary tensor algebra") {
    auto F = CycField::make(2);
    FiniteGroup C2 = FiniteGroup::from_cyclic_factors({2});
    FDAlgebra A = group_algebra(C2, F);
    LinMap fl = flip_map(2, 2, F);
    FDAlgebra T = twisted_tensor_algebra(A, A, fl);
    CHECK(T.dim() == 4);
    // componentwise products, unit law
    Vec one = T.unit_vec();
    for (int i = 0; i < 4; ++i) {
        Vec e = unit_vec(4, i, F);
        CHECK(vec_eq(T.mul_vec(one, e), e));
        CHECK(vec_eq(T.mul_vec(e, one), e));
    }
    // (g (x) 1)(g (x) g) = (1 (x) g)
    Vec a = unit_vec(4, 1 * 2 + 0, F), b = unit_vec(4, 1 * 2 + 1, F);
    CHECK(vec_eq(T.mul_vec(a, b), unit_vec(4, 0 * 2 + 1, F)));
}

TEST_CASE("convolution algebra basics on a group coalgebra") {
    auto F = CycField::make(2);
    FiniteGroup C2 = FiniteGroup::from_cyclic_factors({2});
    FDAlgebra A = group_algebra(C2, F);
    FDCoalgebra C = group_coalgebra(C2, F);
    LinMap eta_eps = conv_unit(C, A);
    // f = eta o eps is the convolution unit
    std::mt19937 rng(11);
    LinMap g(2, 2, F);
    for (auto& x : g.a) x = F->from_int((long long)(rng() % 5) - 2);
    CHECK(convolution(eta_eps, g, C, A) == g);
    CHECK(convolution(g, eta_eps, C, A) == g);
    // eps * eps = eps (as mapped via eta)
    CHECK(convolution(eta_eps, eta_eps, C, A) == eta_eps);
    // conv_inverse(eta o eps) = eta o eps
    auto inv = conv_inverse(eta_eps, C, A);
    REQUIRE(inv.has_value());
    CHECK(*inv == eta_eps);
    // zero map is not invertible
    LinMap z(2, 2, F);
    CHECK_FALSE(conv_inverse(z, C, A).has_value());
    // id on the group Hopf algebra has inverse g -> g^{-1}
    LinMap idm = LinMap::identity(2, F);
    auto sinv = conv_inverse(idm, C, A);
    REQUIRE(sinv.has_value());
    LinMap S(2, 2, F);
    S.at(0, 0) = F->one();
    S.at(1, 1) = F->one(); // every element of C2 is its own inverse
    CHECK(*sinv == S);
}

TEST_CASE("element inverse") {
    auto F = CycField::make(2);
    FiniteGroup C2 = FiniteGroup::from_cyclic_factors({2});
    FDAlgebra A = group_algebra(C2, F);
    CHECK(vec_eq(*element_inverse(A, A.unit_vec()), A.unit_vec()));
    // (1+g)/2 is idempotent, hence not invertible
    Vec v = {F->from_rational(Rational(1, 2)), F->from_rational(Rational(1, 2))};
    CHECK(vec_eq(A.mul_vec(v, v), v));
    CHECK_FALSE(element_inverse(A, v).has_value());
    // 1+g itself is singular too
    Vec w = {F->one(), F->one()};
    CHECK_FALSE(element_inverse(A, w).has_value());
    // g inverts to g
    Vec g = unit_vec(2, 1, F);
    CHECK(vec_eq(*element_inverse(A, g), g));
    CHECK(vec_eq(element_power(A, g, -3), g));
}

TEST_CASE("coords_in_span") {
    auto F = CycField::make(1);
    std::vector<Vec> span = {{F->one(), F->zero(), F->one()}, {F->zero(), F->one(), F->zero()}};
    Vec v = {F->from_int(2), F->from_int(3), F->from_int(2)};
    auto c = coords_in_span(span, v, F);
    REQUIRE(c.has_value());
    CHECK((*c)[0] == F->from_int(2));
    CHECK((*c)[1] == F->from_int(3));
    Vec out = {F->one(), F->zero(), F->zero()};
    CHECK_FALSE(coords_in_span(span, out, F).has_value());
}
