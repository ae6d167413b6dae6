#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hdw/qcalc.hpp"

using namespace hdw;

TEST_CASE("q_int and q_fact by summation") {
    auto F1 = CycField::make(1);
    CHECK(q_int(4, F1->one()) == F1->from_int(4));
    CHECK(q_int(0, F1->one()).is_zero());
    CHECK(q_fact(0, F1->one()).is_one());

    auto F3 = CycField::make(3);
    CHECK(q_int(3, F3->zeta(1)).is_zero()); // 1 + z + z^2 = 0

    auto F6 = CycField::make(6);
    CycNum t = F6->zeta(2);
    CHECK(q_fact(2, t) == F6->one() + t); // (1)_t (2)_t
}

TEST_CASE("gauss binomial base cases and small values") {
    auto F3 = CycField::make(3);
    CycNum z = F3->zeta(1);
    for (int i = 0; i <= 8; ++i) {
        CHECK(gauss_binom(i, 0, z).is_one());
        CHECK(gauss_binom(i, i, z).is_one());
    }
    CHECK(gauss_binom(3, 1, z).is_zero());      // (3)_z = 0
    CHECK(gauss_binom(2, 1, z) == F3->one() + z);
    CHECK_THROWS_AS(gauss_binom(2, 3, z), std::invalid_argument);
}

TEST_CASE("Pascal evaluation equals polynomial evaluation") {
    auto F3 = CycField::make(3);
    auto F4 = CycField::make(4);
    auto F6 = CycField::make(6);
    std::vector<CycNum> points = {F6->one(), F3->zeta(1), F4->zeta(1), F6->zeta(1), F6->from_int(2)};
    for (const CycNum& t : points)
        for (int i = 0; i <= 12; ++i)
            for (int j = 0; j <= i; ++j)
                CHECK(gauss_binom(i, j, t) == gauss_poly(i, j).eval(t));
}

TEST_CASE("gauss polynomials have nonnegative coefficients") {
    for (int i = 0; i <= 10; ++i)
        for (int j = 0; j <= i; ++j)
            for (long long c : gauss_poly(i, j).c) CHECK(c >= 0);
}

TEST_CASE("Chu-Vandermonde") {
    // polynomial identity
    CHECK(verify_vandermonde_poly(1, 1, 1));
    for (int i = 0; i <= 5; ++i)
        for (int j = 0; j <= 5; ++j)
            for (int l = 0; l <= i + j; ++l) CHECK(verify_vandermonde_poly(i, j, l));
    // evaluated at a root of unity
    auto F6 = CycField::make(6);
    CHECK(verify_vandermonde(2, 3, 2, F6->zeta(1)));
    for (int l = 0; l <= 4; ++l) CHECK(verify_vandermonde(4, 0, l, F6->zeta(1)));
}

TEST_CASE("alternating sum collapses to delta_{i,0}") {
    auto F3 = CycField::make(3);
    CHECK(alt_sum(0, F3->zeta(1)).is_one());
    CHECK(alt_sum(1, F3->zeta(1)).is_zero());
    CHECK(alt_sum(2, F3->zeta(1)).is_zero()); // 1 - (1+z) + z
    for (int n = 2; n <= 12; ++n) {
        auto F = CycField::make(n);
        for (int k = 1; k < n; ++k) {
            if (std::gcd(k, n) != 1) continue;
            CycNum t = F->zeta(k); // every primitive n-th root
            CHECK(alt_sum(0, t).is_one());
            for (int i = 1; i < n; ++i) CHECK(alt_sum(i, t).is_zero());
        }
    }
}

TEST_CASE("inner cocycle sum: closed value at r=0, zero for 0<r<n") {
    for (int n = 2; n <= 6; ++n) {
        auto F = CycField::make(n);
        CycNum t = F->zeta(1); // order n
        for (int s = 0; s < n; ++s)
            for (int i = 0; i <= s; ++i) {
                CycNum r0 = cocycle_inner_sum(s, 0, i, t);
                CycNum expect = t.pow((long long)(s - i) * (s - i - 1) / 2);
                if ((s - i) % 2) expect = -expect;
                CHECK(r0 == expect);
                for (int r = 1; r < n; ++r) CHECK(cocycle_inner_sum(s, r, i, t).is_zero());
            }
    }
}

TEST_CASE("split inner sum identities (xi < n vs xi >= n parts)") {
    // part sums of the inner cocycle sum: with 0 < r < n the xi<n part equals
    // minus the xi>=n part, and it vanishes outright when 0 < r < n-s+i
    for (int n = 2; n <= 6; ++n) {
        auto F = CycField::make(n);
        CycNum t = F->zeta(1);
        for (int s = 0; s < n; ++s)
            for (int i = 0; i <= s; ++i)
                for (int r = 0; r < n; ++r) {
                    CycNum low = F->zero(), high = F->zero();
                    for (int j = 0; j <= r; ++j) {
                        long long xi = s + r - i - j;
                        CycNum term = gauss_binom(r, j, t) *
                                      t.pow(xi * (xi - 1) / 2 + (long long)s * j - (long long)i * j);
                        if (xi % 2) term = -term;
                        if (xi < n) low = low + term; else high = high + term;
                    }
                    if (r == 0) {
                        CycNum expect = t.pow((long long)(s - i) * (s - i - 1) / 2);
                        if ((s - i) % 2) expect = -expect;
                        CHECK(low == expect);
                    } else {
                        CHECK(low == -high);
                        if (r < n - s + i) CHECK(low.is_zero());
                    }
                }
    }
}
