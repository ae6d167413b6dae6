#include "hdw/hd.hpp"

#include <stdexcept>

namespace hdw {

Basis hd_basis(const FiniteGroup& G, int n) {
    Basis b;
    for (int g = 0; g < G.order; ++g)
        for (int i = 0; i < n; ++i) {
            std::string lbl;
            if (i == 0) {
                lbl = G.label(g);
            } else {
                std::string xs = (i == 1) ? "x" : "x^" + std::to_string(i);
                lbl = (g == G.identity) ? xs : G.label(g) + "*" + xs;
            }
            b.labels.push_back(lbl);
        }
    return b;
}

Report validate_datum_E(const DatumE& E, const Field& fld) {
    Report rep;
    const FiniteGroup& G = E.G;
    rep.check("datum-E-n", E.n > 1, "", "n=" + std::to_string(E.n));
    rep.check("datum-E-character", E.chi.validate(G));
    rep.check("datum-E-U-dim", (int)E.U.size() == G.order);
    if (!rep.ok()) return rep;
    {
        bool ok = true;
        std::string wit;
        for (int h = 0; h < G.order && ok; ++h)
            for (int g = 0; g < G.order && ok; ++g) {
                int conj = G.mul(G.mul(h, g), G.inv(h));
                CycNum rhs = E.chi.value_pow(fld, h, E.n) * E.U[g];
                if (E.U[conj] != rhs) {
                    ok = false;
                    wit = "(h=" + G.label(h) + ", g=" + G.label(g) + ")";
                }
            }
        rep.check("datum-E-conjugation", ok, wit);
    }
    {
        bool ok = true;
        std::string wit;
        for (int g = 0; g < G.order && ok; ++g)
            if (!E.U[g].is_zero() && E.chi.exp[g] != 0) {
                ok = false;
                wit = "(g=" + G.label(g) + ")";
            }
        rep.check("datum-E-support-kernel", ok, wit);
    }
    // consequence when U is supported on a central element: chi^n = 1
    for (int g = 0; g < G.order; ++g)
        if (!E.U[g].is_zero() && is_central(G, g)) {
            bool chin = true;
            for (int h = 0; h < G.order; ++h)
                if ((E.chi.exp[h] * E.n) % E.chi.m != 0) chin = false;
            rep.check("datum-E-central-support-chi-n", chin, "(g=" + G.label(g) + ")");
            break;
        }
    return rep;
}

FDAlgebra build_BE(const DatumE& E, const Field& fld) {
    Report v = validate_datum_E(E, fld);
    v.require_ok("build_BE");
    const FiniteGroup& G = E.G;
    int n = E.n, d = G.order * n;
    FDAlgebra A;
    A.fld = fld;
    A.basis = hd_basis(G, n);
    A.mult.resize((size_t)d * d);
    for (int g = 0; g < G.order; ++g)
        for (int i = 0; i < n; ++i)
            for (int h = 0; h < G.order; ++h)
                for (int j = 0; j < n; ++j) {
                    CycNum coef = E.chi.value_pow(fld, h, i);
                    int gh = G.mul(g, h);
                    TermVec out;
                    if (i + j < n) {
                        out.push_back({gh * n + (i + j), coef});
                    } else {
                        for (int l = 0; l < G.order; ++l) {
                            if (E.U[l].is_zero()) continue;
                            out.push_back({G.mul(gh, l) * n + (i + j - n), coef * E.U[l]});
                        }
                    }
                    A.mult[(size_t)(g * n + i) * d + (h * n + j)] = normalize_terms(std::move(out));
                }
    A.unit = {{G.identity * n + 0, fld->one()}};
    // associativity is a theorem for valid data; confirm exhaustively anyway
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            const TermVec& ab = A.mul(a, b);
            for (int c = 0; c < d; ++c) {
                TermVec lhs = A.mul_terms(ab, {{c, fld->one()}});
                TermVec rhs = A.mul_terms({{a, fld->one()}}, A.mul(b, c));
                if (lhs.size() != rhs.size())
                    throw std::logic_error("build_BE: associativity failed at (" + A.basis[a] +
                                           ", " + A.basis[b] + ", " + A.basis[c] + ")");
                for (size_t t = 0; t < lhs.size(); ++t)
                    if (lhs[t].idx != rhs[t].idx || lhs[t].c != rhs[t].c)
                        throw std::logic_error("build_BE: associativity failed at (" + A.basis[a] +
                                               ", " + A.basis[b] + ", " + A.basis[c] + ")");
            }
        }
    return A;
}

Report validate_datum_D(const DatumD& D, const Field& fld, DatumDInfo* out) {
    Report rep;
    const FiniteGroup& G = D.G;
    rep.check("datum-D-character", D.chi.validate(G));
    rep.check("datum-D-q-nonzero", !D.q.is_zero());
    rep.check("datum-D-z-central", is_central(G, D.z), "(z=" + G.label(D.z) + ")");
    if (!rep.ok()) return rep;
    DatumDInfo info;
    info.p = D.chi.value(fld, D.z);
    info.qp = D.q * info.p;
    auto ord = info.qp.mult_order();
    if (!ord) {
        rep.fail("datum-D-qp-root-of-unity", "", "q*chi(z) is not a root of unity");
        return rep;
    }
    info.n = *ord;
    rep.check("datum-D-n-greater-1", info.n > 1, "", "n=" + std::to_string(info.n));
    if (!rep.ok()) return rep;
    // U = lambda (z^n - 1)
    int zn = G.pow(D.z, info.n);
    info.U = zero_vec(G.order, fld);
    if (zn != G.identity) {
        info.U[zn] = D.lambda;
        info.U[G.identity] = info.U[G.identity] - D.lambda;
    }
    info.U_nonzero = !vec_is_zero(info.U);
    info.lambda = info.U_nonzero ? D.lambda : fld->zero(); // canonical form
    if (info.U_nonzero) {
        bool chin = true;
        std::string wit;
        for (int h = 0; h < G.order; ++h)
            if ((D.chi.exp[h] * info.n) % D.chi.m != 0) {
                chin = false;
                wit = "(h=" + G.label(h) + ")";
                break;
            }
        rep.check("datum-D-chi-n-trivial", chin, wit);
        if (chin)
            rep.check("datum-D-q-n-one", D.q.pow(info.n).is_one(), "",
                      "q^n = 1 forced by chi^n = 1");
    } else if (!D.lambda.is_zero()) {
        rep.info("datum-D-lambda-normalized", "lambda set to 0 since lambda(z^n - 1) = 0");
    }
    if (out && rep.ok()) *out = info;
    return rep;
}

bool HDAlgebra::pq_excluded() const {
    return info.p.is_one() && (-datum.q).is_one();
}

HDAlgebra build_HD(const DatumD& D, const Field& fld) {
    DatumDInfo info;
    Report v = validate_datum_D(D, fld, &info);
    v.require_ok("build_HD");
    const FiniteGroup& G = D.G;
    int n = info.n;

    DatumE E{G, D.chi, info.U, n};
    FDAlgebra alg = build_BE(E, fld);
    int d = alg.dim();

    FDCoalgebra coalg;
    coalg.fld = fld;
    coalg.basis = alg.basis;
    coalg.comult.resize(d);
    coalg.counit.assign(d, fld->zero());
    for (int g = 0; g < G.order; ++g)
        for (int i = 0; i < n; ++i) {
            PairTermVec dd;
            for (int j = 0; j <= i; ++j) {
                CycNum coef = gauss_binom(i, j, info.qp);
                if (coef.is_zero()) continue;
                int gz_j = G.mul(g, G.pow(D.z, j));
                dd.push_back({g * n + j, gz_j * n + (i - j), coef});
            }
            coalg.comult[g * n + i] = std::move(dd);
            coalg.counit[g * n + i] = (i == 0) ? fld->one() : fld->zero();
        }

    LinMap braid = cq_braid(G.order, n, D.q);

    // antipode: S(g x^i) = (-1)^i (qp)^(i(i-1)/2) x^i z^-i g^-1, normal-formed
    // by an actual product in B_E rather than a hand-derived scalar
    LinMap S(d, d, fld);
    for (int g = 0; g < G.order; ++g)
        for (int i = 0; i < n; ++i) {
            CycNum scal = info.qp.pow((long long)i * (i - 1) / 2);
            if (i % 2) scal = -scal;
            int grp = G.mul(G.pow(D.z, -i), G.inv(g)); // z^-i g^-1
            TermVec prod = alg.mul_terms({{G.identity * n + i, fld->one()}},
                                         {{grp * n + 0, fld->one()}});
            TermVec col;
            for (const auto& t : prod) col.push_back({t.idx, scal * t.c});
            S.set_column(g * n + i, normalize_terms(std::move(col)));
        }

    HDAlgebra HD;
    HD.H = make_verified(std::move(alg), std::move(coalg), std::move(braid), std::move(S));
    HD.datum = D;
    HD.datum.lambda = info.lambda;
    HD.info = info;
    HD.gcount = G.order;
    HD.n = n;
    return HD;
}

HDAlgebra taft(int n, const CycNum& xi) {
    if (n <= 1) throw std::invalid_argument("taft: n > 1 required");
    auto ord = xi.mult_order();
    if (!ord || *ord != n) throw std::invalid_argument("taft: xi must be a primitive n-th root");
    const Field& fld = xi.field();
    FiniteGroup G = FiniteGroup::from_cyclic_factors({n});
    // chi(g) = xi: find the zeta exponent of xi
    int e = -1;
    for (int k = 0; k < fld->m(); ++k)
        if (fld->zeta(k) == xi) { e = k; break; }
    if (e < 0) throw std::invalid_argument("taft: xi is not a power of zeta_m");
    Character chi = Character::from_generator_exponents(G, fld->m(), {e});
    DatumD D{G, chi, G.generators[0], fld->one(), fld->one()};
    return build_HD(D, fld);
}

} // namespace hdw
