#include "hdw/braided.hpp"

#include <stdexcept>

#include "hdw/detail/check.hpp"

namespace hdw {

namespace {

using detail::Check;

bool terms_eq(const TermVec& a, const TermVec& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i].idx != b[i].idx || a[i].c != b[i].c) return false;
    return true;
}

std::string wit1(const Basis& B, int i) { return "(" + B[i] + ")"; }
std::string wit2(const Basis& B, int i, int j) { return "(" + B[i] + ", " + B[j] + ")"; }
std::string wit3(const Basis& B, int i, int j, int k) {
    return "(" + B[i] + ", " + B[j] + ", " + B[k] + ")";
}

} // namespace

Report verify_braid_compat(const BraidedBialgebra& H) {
    Report rep;
    const int d = H.dim();
    const Field& F = H.field();
    const Basis& B = H.basis();
    const LinMap& c = H.braid;
    auto braid_cols = [&](int i, int j) { return c.column(i * d + j); };

    {
        Check ck{"braid-unit-left"};
        for (int j = 0; j < d; ++j) {
            TermVec in;
            for (const auto& u : H.alg.unit) in.push_back({u.idx * d + j, u.c});
            TermVec lhs = c.apply_terms(normalize_terms(std::move(in)));
            TermVec rhs;
            for (const auto& u : H.alg.unit) rhs.push_back({j * d + u.idx, u.c});
            ck.expect(terms_eq(lhs, normalize_terms(std::move(rhs))), wit1(B, j));
        }
        ck.commit(rep);
    }
    {
        Check ck{"braid-unit-right"};
        for (int j = 0; j < d; ++j) {
            TermVec in;
            for (const auto& u : H.alg.unit) in.push_back({j * d + u.idx, u.c});
            TermVec lhs = c.apply_terms(normalize_terms(std::move(in)));
            TermVec rhs;
            for (const auto& u : H.alg.unit) rhs.push_back({u.idx * d + j, u.c});
            ck.expect(terms_eq(lhs, normalize_terms(std::move(rhs))), wit1(B, j));
        }
        ck.commit(rep);
    }
    {
        Check ck{"braid-mult-left"}; // c(mu (x) H) = (H (x) mu)(c (x) H)(H (x) c)
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                for (int k = 0; k < d; ++k) {
                    TermVec lhs;
                    for (const auto& t : H.alg.mul(i, j))
                        for (const auto& p : braid_cols(t.idx, k)) lhs.push_back({p.idx, t.c * p.c});
                    lhs = normalize_terms(std::move(lhs));
                    TermVec rhs;
                    for (const auto& p : braid_cols(j, k)) {
                        int u = p.idx / d, v = p.idx % d; // e_i (x) u (x) v
                        for (const auto& q : braid_cols(i, u)) {
                            int w = q.idx / d, x = q.idx % d; // w (x) x (x) v
                            for (const auto& m : H.alg.mul(x, v))
                                rhs.push_back({w * d + m.idx, p.c * q.c * m.c});
                        }
                    }
                    ck.expect(terms_eq(lhs, normalize_terms(std::move(rhs))), wit3(B, i, j, k));
                }
        ck.commit(rep);
    }
    {
        Check ck{"braid-mult-right"}; // c(H (x) mu) = (mu (x) H)(H (x) c)(c (x) H)
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                for (int k = 0; k < d; ++k) {
                    TermVec lhs;
                    for (const auto& t : H.alg.mul(j, k))
                        for (const auto& p : braid_cols(i, t.idx)) lhs.push_back({p.idx, t.c * p.c});
                    lhs = normalize_terms(std::move(lhs));
                    TermVec rhs;
                    for (const auto& p : braid_cols(i, j)) {
                        int u = p.idx / d, v = p.idx % d; // u (x) v (x) e_k
                        for (const auto& q : braid_cols(v, k)) {
                            int w = q.idx / d, x = q.idx % d; // u (x) w (x) x
                            for (const auto& m : H.alg.mul(u, w))
                                rhs.push_back({m.idx * d + x, p.c * q.c * m.c});
                        }
                    }
                    ck.expect(terms_eq(lhs, normalize_terms(std::move(rhs))), wit3(B, i, j, k));
                }
        ck.commit(rep);
    }
    {
        Check ck{"braid-counit-left"}; // (H (x) eps) o c = eps (x) H
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                TermVec lhs;
                for (const auto& p : braid_cols(i, j)) {
                    int u = p.idx / d, v = p.idx % d;
                    add_term(lhs, u, p.c * H.coalg.counit[v]);
                }
                TermVec rhs;
                add_term(rhs, j, H.coalg.counit[i]);
                ck.expect(terms_eq(normalize_terms(std::move(lhs)), normalize_terms(std::move(rhs))),
                          wit2(B, i, j));
            }
        ck.commit(rep);
    }
    {
        Check ck{"braid-counit-right"}; // (eps (x) H) o c = H (x) eps
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                TermVec lhs;
                for (const auto& p : braid_cols(i, j)) {
                    int u = p.idx / d, v = p.idx % d;
                    add_term(lhs, v, p.c * H.coalg.counit[u]);
                }
                TermVec rhs;
                add_term(rhs, i, H.coalg.counit[j]);
                ck.expect(terms_eq(normalize_terms(std::move(lhs)), normalize_terms(std::move(rhs))),
                          wit2(B, i, j));
            }
        ck.commit(rep);
    }
    {
        Check ck{"braid-comult-left"}; // (H (x) Delta) o c = (c (x) H)(H (x) c)(Delta (x) H)
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                TermVec lhs; // triples (w, v1, v2)
                for (const auto& p : braid_cols(i, j)) {
                    int u = p.idx / d, v = p.idx % d;
                    for (const auto& dv : H.coalg.comult[v])
                        lhs.push_back({(u * d + dv.a) * d + dv.b, p.c * dv.c});
                }
                lhs = normalize_terms(std::move(lhs));
                TermVec rhs;
                for (const auto& di : H.coalg.comult[i]) {
                    for (const auto& p : braid_cols(di.b, j)) {
                        int w = p.idx / d, x = p.idx % d; // i1 (x) w (x) x
                        for (const auto& q : braid_cols(di.a, w)) {
                            int y = q.idx / d, z = q.idx % d;
                            rhs.push_back({(y * d + z) * d + x, di.c * p.c * q.c});
                        }
                    }
                }
                ck.expect(terms_eq(lhs, normalize_terms(std::move(rhs))), wit2(B, i, j));
            }
        ck.commit(rep);
    }
    {
        Check ck{"braid-comult-right"}; // (Delta (x) H) o c = (H (x) c)(c (x) H)(H (x) Delta)
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                TermVec lhs; // triples (u1, u2, v)
                for (const auto& p : braid_cols(i, j)) {
                    int u = p.idx / d, v = p.idx % d;
                    for (const auto& du : H.coalg.comult[u])
                        lhs.push_back({(du.a * d + du.b) * d + v, p.c * du.c});
                }
                lhs = normalize_terms(std::move(lhs));
                TermVec rhs;
                for (const auto& dj : H.coalg.comult[j]) {
                    for (const auto& p : braid_cols(i, dj.a)) {
                        int w = p.idx / d, x = p.idx % d; // w (x) x (x) j2
                        for (const auto& q : braid_cols(x, dj.b)) {
                            int y = q.idx / d, z = q.idx % d;
                            rhs.push_back({(w * d + y) * d + z, dj.c * p.c * q.c});
                        }
                    }
                }
                ck.expect(terms_eq(lhs, normalize_terms(std::move(rhs))), wit2(B, i, j));
            }
        ck.commit(rep);
    }
    rep.check("braid-bijective", rank(c) == d * d, "", "dim=" + std::to_string(d * d));
    (void)F;
    return rep;
}

Report verify_bialgebra(const BraidedBialgebra& H) {
    Report rep;
    const int d = H.dim();
    const Basis& B = H.basis();
    {
        Check ck{"algebra-assoc"};
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                const TermVec& ij = H.alg.mul(i, j);
                for (int k = 0; k < d; ++k) {
                    TermVec lhs = H.alg.mul_terms(ij, {{k, H.field()->one()}});
                    TermVec rhs = H.alg.mul_terms({{i, H.field()->one()}}, H.alg.mul(j, k));
                    ck.expect(terms_eq(lhs, rhs), wit3(B, i, j, k));
                }
            }
        ck.commit(rep);
    }
    {
        Check ck{"algebra-unit"};
        for (int i = 0; i < d; ++i) {
            TermVec e = {{i, H.field()->one()}};
            ck.expect(terms_eq(H.alg.mul_terms(H.alg.unit, e), e) &&
                          terms_eq(H.alg.mul_terms(e, H.alg.unit), e),
                      wit1(B, i));
        }
        ck.commit(rep);
    }
    {
        Check ck{"coalgebra-coassoc"};
        for (int i = 0; i < d; ++i) {
            TermVec lhs, rhs; // triples
            for (const auto& p : H.coalg.comult[i]) {
                for (const auto& q : H.coalg.comult[p.a])
                    lhs.push_back({(q.a * d + q.b) * d + p.b, p.c * q.c});
                for (const auto& q : H.coalg.comult[p.b])
                    rhs.push_back({(p.a * d + q.a) * d + q.b, p.c * q.c});
            }
            ck.expect(terms_eq(normalize_terms(std::move(lhs)), normalize_terms(std::move(rhs))),
                      wit1(B, i));
        }
        ck.commit(rep);
    }
    {
        Check ck{"coalgebra-counit"};
        for (int i = 0; i < d; ++i) {
            TermVec left, right, e = {{i, H.field()->one()}};
            for (const auto& p : H.coalg.comult[i]) {
                add_term(left, p.b, H.coalg.counit[p.a] * p.c);
                add_term(right, p.a, H.coalg.counit[p.b] * p.c);
            }
            ck.expect(terms_eq(normalize_terms(std::move(left)), e) &&
                          terms_eq(normalize_terms(std::move(right)), e),
                      wit1(B, i));
        }
        ck.commit(rep);
    }
    {
        Check ck{"counit-algebra-morphism"};
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                CycNum lhs = H.field()->zero();
                for (const auto& t : H.alg.mul(i, j)) lhs = lhs + t.c * H.coalg.counit[t.idx];
                ck.expect(lhs == H.coalg.counit[i] * H.coalg.counit[j], wit2(B, i, j));
            }
        CycNum e1 = H.field()->zero();
        for (const auto& u : H.alg.unit) e1 = e1 + u.c * H.coalg.counit[u.idx];
        ck.expect(e1.is_one(), "(unit)");
        ck.commit(rep);
    }
    {
        Check ck{"unit-coalgebra-morphism"};
        TermVec du; // Delta(1) flattened
        for (const auto& u : H.alg.unit)
            for (const auto& p : H.coalg.comult[u.idx]) du.push_back({p.a * d + p.b, u.c * p.c});
        TermVec uu;
        for (const auto& u : H.alg.unit)
            for (const auto& v : H.alg.unit) uu.push_back({u.idx * d + v.idx, u.c * v.c});
        ck.expect(terms_eq(normalize_terms(std::move(du)), normalize_terms(std::move(uu))),
                  "(unit)");
        ck.commit(rep);
    }
    {
        Check ck{"bialgebra-compat"}; // Delta o mu = (mu (x) mu)(H (x) c (x) H)(Delta (x) Delta)
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                TermVec lhs;
                for (const auto& t : H.alg.mul(i, j))
                    for (const auto& p : H.coalg.comult[t.idx])
                        lhs.push_back({p.a * d + p.b, t.c * p.c});
                lhs = normalize_terms(std::move(lhs));
                TermVec rhs;
                for (const auto& pi : H.coalg.comult[i])
                    for (const auto& pj : H.coalg.comult[j])
                        for (const auto& br : H.braid.column(pi.b * d + pj.a)) {
                            int u = br.idx / d, v = br.idx % d;
                            for (const auto& m1 : H.alg.mul(pi.a, u))
                                for (const auto& m2 : H.alg.mul(v, pj.b))
                                    rhs.push_back({m1.idx * d + m2.idx,
                                                   pi.c * pj.c * br.c * m1.c * m2.c});
                        }
                ck.expect(terms_eq(lhs, normalize_terms(std::move(rhs))), wit2(B, i, j));
            }
        ck.commit(rep);
    }
    return rep;
}

Report verify_antipode(const BraidedBialgebra& H) {
    Report rep;
    if (!H.antipode) {
        rep.fail("antipode-present", "", "no antipode supplied");
        return rep;
    }
    const int d = H.dim();
    const Basis& B = H.basis();
    const LinMap& S = *H.antipode;
    LinMap idm = LinMap::identity(d, H.field());
    LinMap target = conv_unit(H.coalg, H.alg);
    auto compare = [&](const char* name, const LinMap& got) {
        for (int c = 0; c < d; ++c)
            for (int r = 0; r < d; ++r)
                if (got.at(r, c) != target.at(r, c)) {
                    rep.fail(name, wit1(B, c));
                    return;
                }
        rep.pass(name);
    };
    compare("antipode-convolution-left", convolution(S, idm, H.coalg, H.alg));
    compare("antipode-convolution-right", convolution(idm, S, H.coalg, H.alg));
    {
        Check ck{"antipode-mult-braid"}; // S o mu = mu o (S (x) S) o c
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                TermVec lhs;
                for (const auto& t : H.alg.mul(i, j))
                    for (const auto& s : S.column(t.idx)) lhs.push_back({s.idx, t.c * s.c});
                lhs = normalize_terms(std::move(lhs));
                TermVec rhs;
                for (const auto& p : H.braid.column(i * d + j)) {
                    int u = p.idx / d, v = p.idx % d;
                    TermVec prod = H.alg.mul_terms(S.column(u), S.column(v));
                    for (const auto& t : prod) rhs.push_back({t.idx, p.c * t.c});
                }
                ck.expect(terms_eq(lhs, normalize_terms(std::move(rhs))), wit2(B, i, j));
            }
        ck.commit(rep);
    }
    return rep;
}

Report verify_yang_baxter(const BraidedBialgebra& H) {
    Report rep;
    const int d = H.dim();
    const Basis& B = H.basis();
    auto braid_cols = [&](int i, int j) { return H.braid.column(i * d + j); };
    std::string witness;
    int nfail = 0;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) {
                // (c x H)(H x c)(c x H) vs (H x c)(c x H)(H x c) on e_i,e_j,e_k
                TermVec lhs, rhs;
                for (const auto& p : braid_cols(i, j)) {
                    int u = p.idx / d, v = p.idx % d;
                    for (const auto& q : braid_cols(v, k)) {
                        int w = q.idx / d, x = q.idx % d;
                        for (const auto& r : braid_cols(u, w)) {
                            int y = r.idx / d, z = r.idx % d;
                            lhs.push_back({(y * d + z) * d + x, p.c * q.c * r.c});
                        }
                    }
                }
                for (const auto& p : braid_cols(j, k)) {
                    int u = p.idx / d, v = p.idx % d;
                    for (const auto& q : braid_cols(i, u)) {
                        int w = q.idx / d, x = q.idx % d;
                        for (const auto& r : braid_cols(x, v)) {
                            int y = r.idx / d, z = r.idx % d;
                            rhs.push_back({(w * d + y) * d + z, p.c * q.c * r.c});
                        }
                    }
                }
                if (!terms_eq(normalize_terms(std::move(lhs)), normalize_terms(std::move(rhs)))) {
                    if (nfail == 0) witness = wit3(B, i, j, k);
                    ++nfail;
                }
            }
    if (nfail == 0)
        rep.info("yang-baxter", "holds on all basis triples");
    else
        rep.info("yang-baxter", "violated, failures=" + std::to_string(nfail), witness);
    return rep;
}

Report verify_all(const BraidedBialgebra& H) {
    Report rep;
    rep.merge(verify_bialgebra(H));
    rep.merge(verify_braid_compat(H));
    if (H.antipode) rep.merge(verify_antipode(H));
    rep.merge(verify_yang_baxter(H));
    return rep;
}

BraidedBialgebra make_verified(FDAlgebra alg, FDCoalgebra coalg, LinMap braid,
                               std::optional<LinMap> antipode) {
    BraidedBialgebra H{std::move(alg), std::move(coalg), std::move(braid), std::move(antipode)};
    Report rep = verify_bialgebra(H);
    rep.merge(verify_braid_compat(H));
    if (H.antipode) rep.merge(verify_antipode(H));
    rep.require_ok("braided bialgebra verification");
    return H;
}

BraidedBialgebra group_hopf_algebra(const FiniteGroup& G, const Field& fld) {
    BraidedBialgebra H;
    H.alg.fld = fld;
    H.alg.basis.labels = G.labels;
    int d = G.order;
    H.alg.mult.resize((size_t)d * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) H.alg.mult[(size_t)i * d + j] = {{G.mul(i, j), fld->one()}};
    H.alg.unit = {{G.identity, fld->one()}};
    H.coalg.fld = fld;
    H.coalg.basis = H.alg.basis;
    H.coalg.comult.resize(d);
    H.coalg.counit.assign(d, fld->one());
    for (int i = 0; i < d; ++i) H.coalg.comult[i] = {{i, i, fld->one()}};
    H.braid = flip_map(d, d, fld);
    LinMap S(d, d, fld);
    for (int i = 0; i < d; ++i) S.at(G.inv(i), i) = fld->one();
    H.antipode = S;
    return H;
}

LinMap cq_braid(int gcount, int n, const CycNum& q) {
    const Field& F = q.field();
    int d = gcount * n;
    LinMap c(d * d, d * d, F);
    for (int g = 0; g < gcount; ++g)
        for (int i = 0; i < n; ++i)
            for (int h = 0; h < gcount; ++h)
                for (int j = 0; j < n; ++j) {
                    int src = (g * n + i) * d + (h * n + j);
                    int dst = (h * n + j) * d + (g * n + i);
                    c.at(dst, src) = q.pow((long long)i * j);
                }
    return c;
}

} // namespace hdw
