#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hdw/groups.hpp"

using namespace hdw;

TEST_CASE("cyclic factor groups") {
    FiniteGroup G = FiniteGroup::from_cyclic_factors({2, 2, 2});
    CHECK(G.order == 8);
    for (int g = 0; g < 8; ++g) CHECK(G.mul(g, g) == G.identity);

    FiniteGroup C6 = FiniteGroup::from_cyclic_factors({6});
    CHECK(C6.order == 6);
    CHECK(C6.element_order(C6.generators[0]) == 6);

    FiniteGroup T = FiniteGroup::from_cyclic_factors({1});
    CHECK(T.order == 1);

    CHECK_THROWS_AS(FiniteGroup::from_cyclic_factors({}), std::invalid_argument);
}

TEST_CASE("centrality") {
    FiniteGroup G = FiniteGroup::from_cyclic_factors({2, 2, 2});
    int z = G.mul(G.mul(G.generators[0], G.generators[1]), G.generators[2]);
    CHECK(is_central(G, z)); // abelian
    CHECK(is_central(G, G.identity));

    FiniteGroup S3 = symmetric_group(3);
    int transposition = -1;
    for (int g = 0; g < S3.order; ++g)
        if (S3.element_order(g) == 2) { transposition = g; break; }
    REQUIRE(transposition >= 0);
    CHECK_FALSE(is_central(S3, transposition));
    CHECK(is_central(S3, S3.identity));
}

TEST_CASE("characters validate multiplicativity") {
    FiniteGroup G = FiniteGroup::from_cyclic_factors({6});
    Character chi = Character::from_generator_exponents(G, 6, {2});
    CHECK(chi.validate(G));
    CHECK(chi.exp[G.identity] == 0);
    CHECK(chi.order() == 3);
    // inconsistent exponent: chi(g)^6 must be 1
    CHECK_THROWS_AS(Character::from_generator_exponents(G, 4, {1}), std::invalid_argument);
}

TEST_CASE("aut_chi_z on the first worked datum is S3") {
    FiniteGroup G = FiniteGroup::from_cyclic_factors({2, 2, 2});
    Character chi = Character::from_generator_exponents(G, 2, {1, 1, 1});
    int z = G.mul(G.mul(G.generators[0], G.generators[1]), G.generators[2]);
    auto auts = aut_chi_z(G, chi, z);
    CHECK(auts.size() == 6);
    for (const auto& a : auts) {
        CHECK(is_automorphism(G, a));
        CHECK(a.apply(z) == z);
        for (int g = 0; g < G.order; ++g) CHECK(chi.exp[a.apply(g)] == chi.exp[g]);
    }
    // exhibit a multiplication-table isomorphism with S3
    std::vector<std::vector<int>> tbl(6, std::vector<int>(6));
    auto index_of = [&](const GroupAutomorphism& x) {
        for (size_t i = 0; i < auts.size(); ++i)
            if (auts[i] == x) return (int)i;
        return -1;
    };
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            int c = index_of(compose(auts[a], auts[b]));
            REQUIRE(c >= 0);
            tbl[a][b] = c;
        }
    FiniteGroup A = FiniteGroup::from_table(tbl);
    CHECK(find_isomorphism(A, symmetric_group(3)).has_value());
}

TEST_CASE("aut_chi_z on the second worked datum is trivial") {
    FiniteGroup G = FiniteGroup::from_cyclic_factors({6});
    Character chi = Character::from_generator_exponents(G, 6, {2});
    auto auts = aut_chi_z(G, chi, G.generators[0]);
    CHECK(auts.size() == 1);
    CHECK(auts[0].is_identity());
}

TEST_CASE("aut_chi_z trivial character on C2") {
    FiniteGroup G = FiniteGroup::from_cyclic_factors({2});
    Character chi = Character::trivial(G, 2);
    auto auts = aut_chi_z(G, chi, G.identity);
    CHECK(auts.size() == 1);
}

TEST_CASE("aut_chi_z size bound") {
    FiniteGroup G = FiniteGroup::from_cyclic_factors({65});
    Character chi = Character::trivial(G, 2);
    CHECK_THROWS_AS(aut_chi_z(G, chi, G.identity), std::invalid_argument);
}

TEST_CASE("semidirect_opp") {
    SUBCASE("first worked datum: order 48") {
        FiniteGroup G = FiniteGroup::from_cyclic_factors({2, 2, 2});
        Character chi = Character::from_generator_exponents(G, 2, {1, 1, 1});
        int z = G.mul(G.mul(G.generators[0], G.generators[1]), G.generators[2]);
        SemidirectOpp S = semidirect_opp(G, chi, z);
        CHECK(S.base.order == 48); // Cayley closure validated by from_table
    }
    SUBCASE("second worked datum: C6") {
        FiniteGroup G = FiniteGroup::from_cyclic_factors({6});
        Character chi = Character::from_generator_exponents(G, 6, {2});
        SemidirectOpp S = semidirect_opp(G, chi, G.generators[0]);
        CHECK(S.base.order == 6);
        bool has6 = false;
        for (int g = 0; g < 6; ++g)
            if (S.base.element_order(g) == 6) has6 = true;
        CHECK(has6); // cyclic of order 6
    }
    SUBCASE("identity automorphisms multiply through the group") {
        FiniteGroup G = FiniteGroup::from_cyclic_factors({4});
        Character chi = Character::from_generator_exponents(G, 4, {1});
        SemidirectOpp S = semidirect_opp(G, chi, G.generators[0]);
        // chi has full image so only identity fixes it pointwise? regardless:
        // pairs with identity automorphism multiply as in G
        int a0 = -1;
        for (size_t i = 0; i < S.auts.size(); ++i)
            if (S.auts[i].is_identity()) a0 = (int)i;
        REQUIRE(a0 >= 0);
        for (int g = 0; g < G.order; ++g)
            for (int h = 0; h < G.order; ++h)
                CHECK(S.base.mul(S.pair_index(g, a0), S.pair_index(h, a0)) ==
                      S.pair_index(G.mul(g, h), a0));
    }
}

TEST_CASE("generating sets generate") {
    for (auto orders : std::vector<std::vector<int>>{{2, 2, 2}, {6}, {4, 2}, {1}}) {
        FiniteGroup G = FiniteGroup::from_cyclic_factors(orders);
        auto gens = generating_set(G);
        std::vector<bool> seen(G.order, false);
        seen[G.identity] = true;
        int cnt = 1;
        bool grew = true;
        while (grew) {
            grew = false;
            for (int a = 0; a < G.order; ++a) {
                if (!seen[a]) continue;
                for (int g : gens) {
                    int b = G.mul(a, g);
                    if (!seen[b]) { seen[b] = true; ++cnt; grew = true; }
                }
            }
        }
        CHECK(cnt == G.order);
    }
}

TEST_CASE("table validation rejects non-groups") {
    // not associative / no identity
    CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {0, 1}}), std::invalid_argument);
}
