#include "hdw/fixtures.hpp"

#include <chrono>

namespace hdw {

int choose_field_order(const std::vector<int>& root_orders) {
    long long m = 2;
    for (int o : root_orders) m = lcm_ll(m, o);
    return (int)m;
}

Fixture fixture_first_example() {
    Fixture fx;
    fx.name = "example-1";
    fx.fld = CycField::make(choose_field_order({2, 1})); // ord(im chi)=2, ord(q)=1
    FiniteGroup G = FiniteGroup::from_cyclic_factors({2, 2, 2});
    Character chi = Character::from_generator_exponents(G, fx.fld->m(), {1, 1, 1});
    int z = G.mul(G.mul(G.generators[0], G.generators[1]), G.generators[2]);
    fx.datum = DatumD{G, chi, z, fx.fld->one(), fx.fld->one()};
    return fx;
}

Fixture fixture_second_example() {
    Fixture fx;
    fx.name = "example-2";
    fx.fld = CycField::make(choose_field_order({3, 3})); // chi and q both of order 3
    FiniteGroup G = FiniteGroup::from_cyclic_factors({6});
    // chi(g) = xi = zeta_6^2, q = xi
    Character chi = Character::from_generator_exponents(G, fx.fld->m(), {2});
    fx.datum = DatumD{G, chi, G.generators[0], fx.fld->one(), fx.fld->zeta(2)};
    return fx;
}

Fixture fixture_taft(int n) {
    Fixture fx;
    fx.name = "taft-" + std::to_string(n);
    fx.fld = CycField::make(choose_field_order({n, 1}));
    FiniteGroup G = FiniteGroup::from_cyclic_factors({n});
    Character chi = Character::from_generator_exponents(G, fx.fld->m(), {fx.fld->m() / n});
    fx.datum = DatumD{G, chi, G.generators[0], fx.fld->one(), fx.fld->one()};
    return fx;
}

Report fixture_report(const Fixture& fx, int max_group_order) {
    Report rep;
    auto start = std::chrono::steady_clock::now();
    DatumDInfo info;
    Report vrep = validate_datum_D(fx.datum, fx.fld, &info);
    rep.merge_prefixed(fx.name + ": ", vrep);
    if (!vrep.ok()) return rep;
    HDAlgebra HD = build_HD(fx.datum, fx.fld);
    rep.info(fx.name + ": dim", std::to_string(HD.dim()));
    rep.info(fx.name + ": n", std::to_string(HD.n));
    rep.info(fx.name + ": p", HD.info.p.to_string());
    Vec xn = HD.H.alg.power(unit_vec(HD.dim(), HD.bidx(HD.group().identity, 1), fx.fld), HD.n);
    rep.info(fx.name + ": x^n", terms_to_string(to_terms(xn), HD.H.basis()));
    rep.merge_prefixed(fx.name + ": ", verify_all(HD.H));
    auto auts = aut_chi_z(HD.group(), HD.datum.chi, HD.datum.z, max_group_order);
    rep.info(fx.name + ": |Aut_chi_z|", std::to_string(auts.size()));
    auto end = std::chrono::steady_clock::now();
    rep.info(fx.name + ": runtime-ms",
             std::to_string(
                 std::chrono::duration_cast<std::chrono::milliseconds>(end - start).count()));
    return rep;
}

CleftDatum regular_cleft_datum(const HDAlgebra& HD) {
    CleftDatum d;
    const Field& F = HD.field();
    d.b_x = unit_vec(HD.dim(), HD.bidx(HD.group().identity, 1), F);
    d.b_g.resize(HD.gcount);
    for (int g = 0; g < HD.gcount; ++g) d.b_g[g] = unit_vec(HD.dim(), HD.bidx(g, 0), F);
    return d;
}

namespace {

struct TableTally {
    int agree = 0, differ = 0;
    std::string first_diff;

    void record(bool ok, const std::string& cell) {
        if (ok) {
            ++agree;
        } else {
            if (differ == 0) first_diff = cell;
            ++differ;
        }
    }
    void report(Report& rep, const std::string& name) const {
        rep.info(name + "-agreements", std::to_string(agree));
        rep.info(name + "-discrepancies", std::to_string(differ), first_diff);
    }
};

Vec rho_value_in_B(const CleftContext& cc, const LinMap& rho, int hidx, int j) {
    int dC = cc.C.dim();
    return from_coinv(cc, to_vec(rho.column(hidx * dC + j), dC, cc.HD->field()));
}

Vec sigma_value_in_B(const CleftContext& cc, const LinMap& sigma, int aidx, int bidx) {
    int dC = cc.C.dim(), dH = cc.HD->dim();
    return from_coinv(cc, to_vec(sigma.column(aidx * dH + bidx), dC, cc.HD->field()));
}

} // namespace

Report evaluate_printed_tables_first_example(const CleftContext& cc, const CleftDatum& d,
                                             const LinMap& rho, const LinMap& sigma) {
    Report rep;
    const HDAlgebra& HD = *cc.HD;
    const AutContext& ctx = *cc.ctx;
    const FiniteGroup& G = HD.group();
    const FDAlgebra& B = cc.B.B;
    const Field& F = HD.field();
    int z = HD.datum.z;
    auto binv = [&](int g) { return *element_inverse(B, d.b_g[g]); };
    auto chi = [&](int g) { return HD.datum.chi.value(F, g); };

    TableTally rt;
    for (int g = 0; g < G.order; ++g)
        for (int j = 0; j < cc.C.dim(); ++j) {
            const Vec& c = cc.C.basis_in_B[j];
            int zg = ctx.auts[cc.C.zeta_of[j]].apply(g);
            // g -> c = b_g c b^-1_{zeta(g)}
            Vec t0 = B.mul_vec(B.mul_vec(d.b_g[g], c), binv(zg));
            rt.record(vec_eq(t0, rho_value_in_B(cc, rho, HD.bidx(g, 0), j)),
                      "(" + G.label(g) + ", c" + std::to_string(j) + ")");
            // gx -> c = b_g (b_x c - alpha(c) b_x) b^-1_{zeta(g) z}
            Vec inner = vec_sub(B.mul_vec(d.b_x, c), B.mul_vec(cc.B.alpha.apply(c), d.b_x));
            Vec t1 = B.mul_vec(B.mul_vec(d.b_g[g], inner), binv(G.mul(zg, z)));
            rt.record(vec_eq(t1, rho_value_in_B(cc, rho, HD.bidx(g, 1), j)),
                      "(" + G.label(g) + "*x, c" + std::to_string(j) + ")");
        }
    rt.report(rep, "printed-action-table");

    TableTally st;
    Vec bx2 = B.mul_vec(d.b_x, d.b_x);
    for (int g = 0; g < G.order; ++g)
        for (int h = 0; h < G.order; ++h) {
            int gh = G.mul(g, h);
            // sigma(g (x) h) = b_g b_h b^-1_{gh}
            Vec t00 = B.mul_vec(B.mul_vec(d.b_g[g], d.b_g[h]), binv(gh));
            st.record(vec_eq(t00, sigma_value_in_B(cc, sigma, HD.bidx(g, 0), HD.bidx(h, 0))),
                      "(" + G.label(g) + ", " + G.label(h) + ")");
            // sigma(gx (x) h) = -chi(h) b_g b_h b_x b^-1_{ghz} + b_g b_x b_h b^-1_{ghz}
            Vec t10 = vec_add(
                vec_scale(-chi(h), B.mul_vec(B.mul_vec(B.mul_vec(d.b_g[g], d.b_g[h]), d.b_x),
                                             binv(G.mul(gh, z)))),
                B.mul_vec(B.mul_vec(B.mul_vec(d.b_g[g], d.b_x), d.b_g[h]), binv(G.mul(gh, z))));
            st.record(vec_eq(t10, sigma_value_in_B(cc, sigma, HD.bidx(g, 1), HD.bidx(h, 0))),
                      "(" + G.label(g) + "*x, " + G.label(h) + ")");
            // sigma(g (x) hx) = 0
            st.record(vec_is_zero(sigma_value_in_B(cc, sigma, HD.bidx(g, 0), HD.bidx(h, 1))),
                      "(" + G.label(g) + ", " + G.label(h) + "*x)");
            // sigma(gx (x) hx) = chi(h) b_g b_h b_x^2 b^-1_{gh}
            Vec t11 =
                vec_scale(chi(h), B.mul_vec(B.mul_vec(B.mul_vec(d.b_g[g], d.b_g[h]), bx2), binv(gh)));
            st.record(vec_eq(t11, sigma_value_in_B(cc, sigma, HD.bidx(g, 1), HD.bidx(h, 1))),
                      "(" + G.label(g) + "*x, " + G.label(h) + "*x)");
        }
    st.report(rep, "printed-cocycle-table");
    return rep;
}

Report evaluate_printed_tables_second_example(const CleftContext& cc, const CleftDatum& d,
                                              const LinMap& rho, const LinMap& sigma) {
    Report rep;
    const HDAlgebra& HD = *cc.HD;
    const FiniteGroup& G = HD.group();
    const FDAlgebra& B = cc.B.B;
    const Field& F = HD.field();
    CycNum xi = HD.info.p; // chi(z) = xi, and q = xi as well
    auto binv = [&](long long e) {
        return *element_inverse(B, d.b_g[G.pow(G.generators[0], e)]);
    };
    auto bg = [&](long long e) { return d.b_g[G.pow(G.generators[0], e)]; };
    auto gx = [&](long long e, int i) { return HD.bidx(G.pow(G.generators[0], e), i); };
    auto mul3 = [&](const Vec& a, const Vec& b, const Vec& c) {
        return B.mul_vec(B.mul_vec(a, b), c);
    };

    TableTally rt;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < cc.C.dim(); ++j) {
            const Vec& c = cc.C.basis_in_B[j];
            Vec ac = cc.B.alpha.apply(c);
            Vec aac = cc.B.alpha.apply(ac);
            // g^i -> c = b_{g^i} c b^-1_{g^i}
            rt.record(vec_eq(mul3(bg(i), c, binv(i)), rho_value_in_B(cc, rho, gx(i, 0), j)),
                      "(g^" + std::to_string(i) + ", c" + std::to_string(j) + ")");
            // g^i x -> c = b_{g^i} (b_x c - alpha(c) b_x) b^-1_{g^(i+1)}
            Vec inner1 = vec_sub(B.mul_vec(d.b_x, c), B.mul_vec(ac, d.b_x));
            rt.record(
                vec_eq(mul3(bg(i), inner1, binv(i + 1)), rho_value_in_B(cc, rho, gx(i, 1), j)),
                "(g^" + std::to_string(i) + "*x, c" + std::to_string(j) + ")");
            // g^i x^2 -> c = b_{g^i} (b_x^2 c + xi b_x alpha(c) b_x + alpha^2(c) b_x^2) b^-1_{g^(i+2)}
            Vec bx2 = B.mul_vec(d.b_x, d.b_x);
            Vec inner2 = vec_add(B.mul_vec(bx2, c),
                                 vec_add(vec_scale(xi, mul3(d.b_x, ac, d.b_x)),
                                         B.mul_vec(aac, bx2)));
            rt.record(
                vec_eq(mul3(bg(i), inner2, binv(i + 2)), rho_value_in_B(cc, rho, gx(i, 2), j)),
                "(g^" + std::to_string(i) + "*x^2, c" + std::to_string(j) + ")");
        }
    rt.report(rep, "printed-action-table");

    TableTally st;
    Vec bx2 = B.mul_vec(d.b_x, d.b_x);
    Vec bx3 = B.mul_vec(bx2, d.b_x);
    Vec bx4 = B.mul_vec(bx3, d.b_x);
    auto sv = [&](int i, int s, int j, int r) {
        return sigma_value_in_B(cc, sigma, gx(i, s), gx(j, r));
    };
    auto cell = [&](int i, int s, int j, int r) {
        return "(g^" + std::to_string(i) + "*x^" + std::to_string(s) + ", g^" + std::to_string(j) +
               "*x^" + std::to_string(r) + ")";
    };
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            // sigma(g^i (x) g^j) = b b b^-1
            st.record(vec_eq(mul3(bg(i), bg(j), binv(i + j)), sv(i, 0, j, 0)), cell(i, 0, j, 0));
            // sigma(g^i x (x) g^j) = -xi^j b_i b_j b_x b^-1_(i+j+1) + b_i b_x b_j b^-1_(i+j+1)
            Vec t = vec_add(vec_scale(-xi.pow(j), B.mul_vec(mul3(bg(i), bg(j), d.b_x), binv(i + j + 1))),
                            B.mul_vec(mul3(bg(i), d.b_x, bg(j)), binv(i + j + 1)));
            st.record(vec_eq(t, sv(i, 1, j, 0)), cell(i, 1, j, 0));
            // sigma(g^i x^2 (x) g^j) = xi^(2j+2) b_i b_j b_x^2 b^-1 + xi^(j+1) b_i b_x b_j b_x b^-1 + b_i b_x^2 b_j b^-1
            t = vec_add(vec_scale(xi.pow(2 * j + 2), B.mul_vec(mul3(bg(i), bg(j), bx2), binv(i + j + 2))),
                        vec_add(vec_scale(xi.pow(j + 1),
                                          B.mul_vec(B.mul_vec(mul3(bg(i), d.b_x, bg(j)), d.b_x),
                                                    binv(i + j + 2))),
                                B.mul_vec(mul3(bg(i), bx2, bg(j)), binv(i + j + 2))));
            st.record(vec_eq(t, sv(i, 2, j, 0)), cell(i, 2, j, 0));
            // sigma(g^i (x) g^j x) = 0, sigma(g^i x (x) g^j x) = 0, sigma(g^i (x) g^j x^2) = 0
            st.record(vec_is_zero(sv(i, 0, j, 1)), cell(i, 0, j, 1));
            st.record(vec_is_zero(sv(i, 1, j, 1)), cell(i, 1, j, 1));
            st.record(vec_is_zero(sv(i, 0, j, 2)), cell(i, 0, j, 2));
            // sigma(g^i x^2 (x) g^j x) = -xi^2j b_i b_j b^-1_(i+j+3) - xi^2j b_i b_j b^-1_(i+j) + xi^2j b_i b_j b_x^3 b^-1_(i+j+3)
            t = vec_add(vec_scale(-xi.pow(2 * j), B.mul_vec(B.mul_vec(bg(i), bg(j)), binv(i + j + 3))),
                        vec_add(vec_scale(-xi.pow(2 * j),
                                          B.mul_vec(B.mul_vec(bg(i), bg(j)), binv(i + j))),
                                vec_scale(xi.pow(2 * j),
                                          B.mul_vec(mul3(bg(i), bg(j), bx3), binv(i + j + 3)))));
            st.record(vec_eq(t, sv(i, 2, j, 1)), cell(i, 2, j, 1));
            // sigma(g^i x (x) g^j x^2) = -xi^j b_i b_j b^-1_(i+j+3) - xi^j b_i b_j b^-1_(i+j) + xi^j b_i b_j b_x^3 b^-1_(i+j+3)
            t = vec_add(vec_scale(-xi.pow(j), B.mul_vec(B.mul_vec(bg(i), bg(j)), binv(i + j + 3))),
                        vec_add(vec_scale(-xi.pow(j), B.mul_vec(B.mul_vec(bg(i), bg(j)), binv(i + j))),
                                vec_scale(xi.pow(j),
                                          B.mul_vec(mul3(bg(i), bg(j), bx3), binv(i + j + 3)))));
            st.record(vec_eq(t, sv(i, 1, j, 2)), cell(i, 1, j, 2));
            // sigma(g^i x^2 (x) g^j x^2): six terms
            t = vec_add(
                vec_scale(-xi.pow(2 * j + 1), B.mul_vec(mul3(bg(i), bg(j), d.b_x), binv(i + j + 4))),
                vec_add(
                    vec_scale(-xi.pow(2 * j + 1),
                              B.mul_vec(mul3(bg(i), bg(j), d.b_x), binv(i + j + 1))),
                    vec_add(
                        vec_scale(xi.pow(j + 1),
                                  B.mul_vec(mul3(bg(i), d.b_x, bg(j)), binv(i + j + 4))),
                        vec_add(vec_scale(xi.pow(j + 1),
                                          B.mul_vec(mul3(bg(i), d.b_x, bg(j)), binv(i + j + 1))),
                                vec_add(vec_scale(xi.pow(2 * j + 1),
                                                  B.mul_vec(mul3(bg(i), bg(j), bx4),
                                                            binv(i + j + 4))),
                                        vec_scale(-xi.pow(j + 1),
                                                  B.mul_vec(B.mul_vec(mul3(bg(i), d.b_x, bg(j)),
                                                                      bx3),
                                                            binv(i + j + 4))))))));
            st.record(vec_eq(t, sv(i, 2, j, 2)), cell(i, 2, j, 2));
        }
    st.report(rep, "printed-cocycle-table");
    (void)F;
    return rep;
}

} // namespace hdw
