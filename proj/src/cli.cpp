#include "hdw/cli.hpp"

namespace hdw {

namespace {

// datum checks as report entries; returns the built algebra when valid
std::optional<HDAlgebra> build_checked(const WorkbenchConfig& cfg, Report& rep) {
    DatumDInfo info;
    Report v = validate_datum_D(cfg.datum(), cfg.fld, &info);
    rep.merge(v);
    if (!v.ok()) return std::nullopt;
    try {
        HDAlgebra HD = build_HD(cfg.datum(), cfg.fld);
        rep.info("dim", std::to_string(HD.dim()));
        rep.info("n", std::to_string(HD.n));
        rep.info("p", HD.info.p.to_string());
        rep.info("qp", HD.info.qp.to_string());
        return HD;
    } catch (const std::exception& e) {
        rep.fail("build-HD", "", e.what());
        return std::nullopt;
    }
}

std::string coinv_label(int j) { return "c" + std::to_string(j); }

} // namespace

Report cmd_verify_hopf(const WorkbenchConfig& cfg, const CommandOptions& opt) {
    Report rep;
    auto HD = build_checked(cfg, rep);
    if (!HD) return rep;
    rep.merge(verify_all(HD->H));
    if (HD->group().order <= opt.max_group_order) {
        auto auts = aut_chi_z(HD->group(), HD->datum.chi, HD->datum.z, opt.max_group_order);
        rep.info("aut-chi-z-order", std::to_string(auts.size()));
    }
    return rep;
}

std::string cmd_dump_structure(const WorkbenchConfig& cfg) {
    HDAlgebra HD = build_HD(cfg.datum(), cfg.fld);
    return dump_structure(HD);
}

Report cmd_verify_comodule_algebra(const WorkbenchConfig& cfg, const CommandOptions& opt) {
    Report rep;
    if (!cfg.comodalg) {
        rep.fail("config", "", "missing comodule_algebra block");
        return rep;
    }
    auto HD = build_checked(cfg, rep);
    if (!HD) return rep;
    AutContext ctx = make_aut_context(*HD, opt.max_group_order);
    ComoduleAlgebraData data;
    try {
        data = realize_comodalg(*cfg.comodalg, *HD, ctx);
    } catch (const std::exception& e) {
        rep.fail("comodule-algebra-config", "", e.what());
        return rep;
    }
    ComodAlgBuilt built = build_comodule_algebra(data, *HD, ctx);
    rep.merge(built.rep);
    if (built.rep.ok()) {
        InducedSubalgebra sub = induced_kG_subalgebra(data, *HD, ctx);
        rep.merge(sub.rep);
    }
    return rep;
}

Report cmd_cleft(const WorkbenchConfig& cfg, const CommandOptions& opt, std::string* tables_out) {
    Report rep;
    if (!cfg.comodalg || !cfg.cleft) {
        rep.fail("config", "", "cleft command needs comodule_algebra and cleft blocks");
        return rep;
    }
    auto HD = build_checked(cfg, rep);
    if (!HD) return rep;
    AutContext ctx = make_aut_context(*HD, opt.max_group_order);
    ComoduleAlgebraData data;
    CleftDatum d;
    try {
        data = realize_comodalg(*cfg.comodalg, *HD, ctx);
        d = realize_cleft(*cfg.cleft, *HD);
    } catch (const std::exception& e) {
        rep.fail("cleft-config", "", e.what());
        return rep;
    }
    CleftContext cc = make_cleft_context(data, *HD, ctx);
    rep.merge(cc.rep);
    if (!cc.rep.ok()) return rep;
    rep.info("coinvariants-dim", std::to_string(cc.C.dim()));

    Report dv = validate_cleft_datum(cc, d);
    rep.merge(dv);
    if (!dv.ok()) return rep;

    LinMap gamma = build_gamma(cc, d);
    LinMap gamma_inv = gamma_inverse_closed(cc, d);
    rep.merge(verify_gamma(cc, gamma, gamma_inv));

    WeakAction wa = weak_action(cc, gamma, gamma_inv);
    rep.merge(wa.rep);
    Cocycle co = cocycle(cc, gamma, gamma_inv);
    rep.merge(co.rep);
    if (!wa.rep.ok() || !co.rep.ok()) return rep;

    rep.merge(cross_check_weak_action_closed_form(cc, d, wa.rho));
    rep.merge(cross_check_cocycle_closed_form(cc, d, co.sigma));
    rep.merge(invariant_elements(cc, d).rep);
    rep.merge(normal_basis(cc, gamma, gamma_inv).rep);
    rep.merge(galois_check(cc, gamma));
    rep.merge(round_trip_crossed_product(cc, wa.rho, co.sigma));
    if (opt.experimental_diagrams) {
        CrossedProductData cp{cc.C.C, cc.sC, wa.rho, co.sigma};
        rep.merge(verify_diagram_conditions(cp, *HD));
    }

    if (tables_out) {
        std::string& out = *tables_out;
        int dH = HD->dim(), dC = cc.C.dim();
        out += "# weak action rho(h ; c) in the coinvariant basis\n";
        for (int a = 0; a < dH; ++a)
            for (int j = 0; j < dC; ++j) {
                TermVec col = wa.rho.column(a * dC + j);
                out += "rho (" + HD->H.basis()[a] + " ; " + coinv_label(j) + ") -> " +
                       terms_to_string(col, cc.C.C.basis) + "\n";
            }
        out += "# cocycle sigma(h , l) in the coinvariant basis\n";
        for (int a = 0; a < dH; ++a)
            for (int b = 0; b < dH; ++b) {
                TermVec col = co.sigma.column(a * dH + b);
                out += "sigma (" + HD->H.basis()[a] + " , " + HD->H.basis()[b] + ") -> " +
                       terms_to_string(col, cc.C.C.basis) + "\n";
            }
    }
    return rep;
}

Report cmd_fixtures(const CommandOptions& opt) {
    Report rep;
    rep.merge(fixture_report(fixture_first_example(), opt.max_group_order));
    rep.merge(fixture_report(fixture_second_example(), opt.max_group_order));
    for (int n = 2; n <= 5; ++n)
        rep.merge(fixture_report(fixture_taft(n), opt.max_group_order));
    return rep;
}

} // namespace hdw
