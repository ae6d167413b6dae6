#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "hdw/cyclotomic.hpp"

using namespace hdw;

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == std::vector<long long>{-1, 1});
    CHECK(cyclotomic_polynomial(2) == std::vector<long long>{1, 1});
    CHECK(cyclotomic_polynomial(3) == std::vector<long long>{1, 1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<long long>{1, 0, 1});
    CHECK(cyclotomic_polynomial(6) == std::vector<long long>{1, -1, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<long long>{1, 0, -1, 0, 1});
    // degree is the totient
    auto F8 = CycField::make(8);
    CHECK(F8->degree() == 4);
    auto F1 = CycField::make(1);
    CHECK(F1->degree() == 1);
    CHECK(F1->zeta(0).is_one());
}

TEST_CASE("reduction and arithmetic identities") {
    auto F3 = CycField::make(3);
    // zeta + zeta^2 = -1 in Q(zeta_3)
    CHECK(F3->zeta(1) + F3->zeta(2) == F3->from_int(-1));

    auto F6 = CycField::make(6);
    CHECK(F6->zeta(2) * F6->zeta(5) == F6->zeta(1));

    // inv(zeta) = zeta^(m-1)
    for (int m : {2, 3, 4, 6, 8, 12}) {
        auto F = CycField::make(m);
        CHECK(F->zeta(1).inv() == F->zeta(m - 1));
        CHECK((F->zeta(1) * F->zeta(m - 1)).is_one());
    }
}

TEST_CASE("zeta has exact order m") {
    for (int m : {1, 2, 3, 4, 6, 8, 12}) {
        auto F = CycField::make(m);
        CycNum z = F->zeta(1);
        CHECK(z.pow(m).is_one());
        for (int j = 1; j < m; ++j) CHECK_FALSE(z.pow(j).is_one());
        CHECK(z.mult_order() == m);
    }
}

TEST_CASE("mult_order") {
    auto F6 = CycField::make(6);
    CHECK(F6->zeta(3).mult_order() == 2);
    CHECK(F6->one().mult_order() == 1);
    CHECK_FALSE(F6->from_int(2).mult_order().has_value());
    // order-2m roots via -zeta^k for odd m
    auto F3 = CycField::make(3);
    CHECK((-F3->zeta(1)).mult_order() == 6);
}

TEST_CASE("reduction idempotence") {
    auto F6 = CycField::make(6);
    std::vector<Rational> raw = {Rational(1, 2), Rational(3), Rational(-2), Rational(5, 7),
                                 Rational(0), Rational(11)};
    CycNum a = F6->from_poly(raw);
    CycNum b = F6->from_poly(std::vector<Rational>(a.coeffs().begin(), a.coeffs().end()));
    CHECK(a == b);
}

TEST_CASE("field axioms on random elements") {
    std::mt19937 rng(12345);
    for (int m : {1, 2, 3, 4, 6, 12}) {
        auto F = CycField::make(m);
        auto rnd = [&]() {
            std::vector<Rational> c(F->degree());
            for (auto& x : c)
                x = Rational((long long)(rng() % 11) - 5, (long long)(rng() % 4) + 1);
            return CycNum(F, c);
        };
        for (int iter = 0; iter < 60; ++iter) {
            CycNum a = rnd(), b = rnd(), c = rnd();
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            if (!a.is_zero()) {
                CHECK((a * a.inv()).is_one());
                CHECK(a / a == F->one());
            }
        }
    }
}

TEST_CASE("division by zero signalled") {
    auto F4 = CycField::make(4);
    CHECK_THROWS_AS(F4->zero().inv(), std::domain_error);
}

TEST_CASE("printing grammar") {
    auto F6 = CycField::make(6);
    CHECK(F6->zero().to_string() == "rat(0)");
    CHECK(F6->from_int(3).to_string() == "rat(3)");
    CycNum v = F6->from_rational(Rational(1, 2)) - F6->zeta(1);
    CHECK(v.to_string() == "rat(1/2) + rat(-1)*zeta(1)");
}

TEST_CASE("rational overflow is detected, not silent") {
    Rational big(INT64_MAX / 2, 1);
    CHECK_THROWS_AS(big * big, std::overflow_error);
}
