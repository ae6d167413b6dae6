#include "hdw/groups.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace hdw {

int FiniteGroup::pow(int a, long long e) const {
    if (e < 0) return pow(inv(a), -e);
    int acc = identity, base = a;
    while (e > 0) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

int FiniteGroup::element_order(int a) const {
    int acc = a, n = 1;
    while (acc != identity) {
        acc = mul(acc, a);
        ++n;
    }
    return n;
}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> tbl, std::vector<std::string> labels) {
    FiniteGroup G;
    G.order = (int)tbl.size();
    if (G.order == 0) throw std::invalid_argument("group: empty table");
    G.table.resize(G.order * G.order);
    for (int a = 0; a < G.order; ++a) {
        if ((int)tbl[a].size() != G.order) throw std::invalid_argument("group: ragged table");
        for (int b = 0; b < G.order; ++b) {
            int v = tbl[a][b];
            if (v < 0 || v >= G.order) throw std::invalid_argument("group: index out of range");
            G.table[a * G.order + b] = v;
        }
    }
    // two-sided identity
    int id = -1;
    for (int e = 0; e < G.order; ++e) {
        bool ok = true;
        for (int a = 0; a < G.order && ok; ++a)
            ok = G.mul(e, a) == a && G.mul(a, e) == a;
        if (ok) { id = e; break; }
    }
    if (id < 0) throw std::invalid_argument("group: no identity");
    G.identity = id;
    // inverses
    G.inverse.assign(G.order, -1);
    for (int a = 0; a < G.order; ++a) {
        for (int b = 0; b < G.order; ++b)
            if (G.mul(a, b) == id && G.mul(b, a) == id) { G.inverse[a] = b; break; }
        if (G.inverse[a] < 0) throw std::invalid_argument("group: missing inverse");
    }
    // associativity
    for (int a = 0; a < G.order; ++a)
        for (int b = 0; b < G.order; ++b)
            for (int c = 0; c < G.order; ++c)
                if (G.mul(G.mul(a, b), c) != G.mul(a, G.mul(b, c)))
                    throw std::invalid_argument("group: not associative");
    if (labels.empty()) {
        for (int a = 0; a < G.order; ++a) labels.push_back("e" + std::to_string(a));
    }
    if ((int)labels.size() != G.order) throw std::invalid_argument("group: label count");
    G.labels = std::move(labels);
    return G;
}

FiniteGroup FiniteGroup::from_cyclic_factors(const std::vector<int>& orders) {
    if (orders.empty()) throw std::invalid_argument("from_cyclic_factors: empty list");
    for (int o : orders)
        if (o < 1) throw std::invalid_argument("from_cyclic_factors: orders >= 1");
    int n = 1;
    for (int o : orders) n *= o;
    int r = (int)orders.size();
    auto coords = [&](int idx) {
        std::vector<int> a(r);
        for (int t = 0; t < r; ++t) {
            a[t] = idx % orders[t];
            idx /= orders[t];
        }
        return a;
    };
    auto index = [&](const std::vector<int>& a) {
        int idx = 0, stride = 1;
        for (int t = 0; t < r; ++t) {
            idx += a[t] * stride;
            stride *= orders[t];
        }
        return idx;
    };
    std::vector<std::vector<int>> tbl(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x) {
        auto ax = coords(x);
        for (int y = 0; y < n; ++y) {
            auto ay = coords(y);
            std::vector<int> s(r);
            for (int t = 0; t < r; ++t) s[t] = (ax[t] + ay[t]) % orders[t];
            tbl[x][y] = index(s);
        }
    }
    std::vector<std::string> labels(n);
    for (int x = 0; x < n; ++x) {
        auto a = coords(x);
        std::string lbl;
        for (int t = 0; t < r; ++t) {
            if (a[t] == 0) continue;
            if (!lbl.empty()) lbl += "*";
            lbl += "g" + std::to_string(t + 1);
            if (a[t] > 1) lbl += "^" + std::to_string(a[t]);
        }
        labels[x] = lbl.empty() ? "1" : lbl;
    }
    FiniteGroup G = from_table(std::move(tbl), std::move(labels));
    for (int t = 0; t < r; ++t) {
        std::vector<int> a(r, 0);
        if (orders[t] > 1) a[t] = 1;
        G.generators.push_back(index(a));
    }
    return G;
}

FiniteGroup symmetric_group(int n) {
    if (n < 1 || n > 5) throw std::invalid_argument("symmetric_group: 1 <= n <= 5");
    std::vector<std::vector<int>> perms;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do perms.push_back(p); while (std::next_permutation(p.begin(), p.end()));
    int N = (int)perms.size();
    std::map<std::vector<int>, int> idx;
    for (int i = 0; i < N; ++i) idx[perms[i]] = i;
    std::vector<std::vector<int>> tbl(N, std::vector<int>(N));
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) {
            std::vector<int> c(n);
            for (int t = 0; t < n; ++t) c[t] = perms[a][perms[b][t]];
            tbl[a][b] = idx[c];
        }
    std::vector<std::string> labels(N);
    for (int i = 0; i < N; ++i) {
        std::string s = "[";
        for (int t = 0; t < n; ++t) s += std::to_string(perms[i][t] + 1);
        labels[i] = s + "]";
    }
    return FiniteGroup::from_table(std::move(tbl), std::move(labels));
}

bool is_central(const FiniteGroup& G, int z) {
    if (z < 0 || z >= G.order) throw std::invalid_argument("is_central: bad element");
    for (int g = 0; g < G.order; ++g)
        if (G.mul(z, g) != G.mul(g, z)) return false;
    return true;
}

CycNum Character::value(const Field& fld, int g) const { return fld->zeta(exp[g]); }

CycNum Character::value_pow(const Field& fld, int g, long long k) const {
    long long e = ((exp[g] * k) % m + m) % m;
    return fld->zeta((int)e);
}

int Character::order() const {
    int n = 1;
    for (int e : exp) {
        int o = m / std::gcd(m, e == 0 ? m : e);
        n = (int)lcm_ll(n, o);
    }
    return n;
}

Character Character::trivial(const FiniteGroup& G, int m) {
    Character chi;
    chi.m = m;
    chi.exp.assign(G.order, 0);
    return chi;
}

Character Character::from_values(const FiniteGroup& G, int m, std::vector<int> exps) {
    if ((int)exps.size() != G.order) throw std::invalid_argument("character: value count");
    Character chi;
    chi.m = m;
    for (int& e : exps) e = ((e % m) + m) % m;
    chi.exp = std::move(exps);
    if (!chi.validate(G)) throw std::invalid_argument("character: not multiplicative");
    return chi;
}

Character Character::from_generator_exponents(const FiniteGroup& G, int m,
                                              const std::vector<int>& gen_exp) {
    if (gen_exp.size() != G.generators.size())
        throw std::invalid_argument("character: one exponent per canonical generator");
    std::vector<int> exp(G.order, -1);
    exp[G.identity] = 0;
    // BFS over products with generators
    bool grew = true;
    while (grew) {
        grew = false;
        for (int g = 0; g < G.order; ++g) {
            if (exp[g] < 0) continue;
            for (size_t t = 0; t < G.generators.size(); ++t) {
                int h = G.mul(g, G.generators[t]);
                int e = ((exp[g] + gen_exp[t]) % m + m) % m;
                if (exp[h] < 0) {
                    exp[h] = e;
                    grew = true;
                } else if (exp[h] != e) {
                    throw std::invalid_argument("character: generator exponents inconsistent");
                }
            }
        }
    }
    for (int g = 0; g < G.order; ++g)
        if (exp[g] < 0) throw std::invalid_argument("character: generators do not generate");
    return from_values(G, m, std::move(exp));
}

bool Character::validate(const FiniteGroup& G) const {
    if (exp[G.identity] != 0) return false;
    for (int a = 0; a < G.order; ++a)
        for (int b = 0; b < G.order; ++b)
            if (exp[G.mul(a, b)] != (exp[a] + exp[b]) % m) return false;
    return true;
}

bool GroupAutomorphism::is_identity() const {
    for (size_t i = 0; i < perm.size(); ++i)
        if (perm[i] != (int)i) return false;
    return true;
}

GroupAutomorphism compose(const GroupAutomorphism& a, const GroupAutomorphism& b) {
    GroupAutomorphism r;
    r.perm.resize(a.perm.size());
    for (size_t i = 0; i < a.perm.size(); ++i) r.perm[i] = a.perm[b.perm[i]];
    return r;
}

GroupAutomorphism inverse(const GroupAutomorphism& a) {
    GroupAutomorphism r;
    r.perm.resize(a.perm.size());
    for (size_t i = 0; i < a.perm.size(); ++i) r.perm[a.perm[i]] = (int)i;
    return r;
}

bool is_automorphism(const FiniteGroup& G, const GroupAutomorphism& a) {
    std::vector<bool> seen(G.order, false);
    for (int g = 0; g < G.order; ++g) {
        if (a.perm[g] < 0 || a.perm[g] >= G.order || seen[a.perm[g]]) return false;
        seen[a.perm[g]] = true;
    }
    for (int g = 0; g < G.order; ++g)
        for (int h = 0; h < G.order; ++h)
            if (a.perm[G.mul(g, h)] != G.mul(a.perm[g], a.perm[h])) return false;
    return true;
}

std::vector<int> generating_set(const FiniteGroup& G) {
    std::vector<int> gens;
    std::vector<bool> closed(G.order, false);
    closed[G.identity] = true;
    int count = 1;
    auto grow = [&](int) {
        bool grew = true;
        while (grew) {
            grew = false;
            for (int a = 0; a < G.order; ++a) {
                if (!closed[a]) continue;
                for (int b = 0; b < G.order; ++b) {
                    if (!closed[b]) continue;
                    int c = G.mul(a, b);
                    if (!closed[c]) {
                        closed[c] = true;
                        ++count;
                        grew = true;
                    }
                }
            }
        }
    };
    while (count < G.order) {
        int pick = -1;
        for (int g = 0; g < G.order; ++g)
            if (!closed[g]) { pick = g; break; }
        gens.push_back(pick);
        closed[pick] = true;
        ++count;
        grow(pick);
    }
    return gens;
}

namespace {

// Extend generator images to a full map via Cayley-graph closure; returns
// empty when inconsistent.
std::vector<int> extend_hom(const FiniteGroup& G, const FiniteGroup& H,
                            const std::vector<int>& gens, const std::vector<int>& imgs) {
    std::vector<int> f(G.order, -1);
    f[G.identity] = H.identity;
    bool grew = true;
    while (grew) {
        grew = false;
        for (int g = 0; g < G.order; ++g) {
            if (f[g] < 0) continue;
            for (size_t t = 0; t < gens.size(); ++t) {
                int gh = G.mul(g, gens[t]);
                int fi = H.mul(f[g], imgs[t]);
                if (f[gh] < 0) {
                    f[gh] = fi;
                    grew = true;
                } else if (f[gh] != fi) {
                    return {};
                }
            }
        }
    }
    for (int g = 0; g < G.order; ++g)
        if (f[g] < 0) return {};
    for (int a = 0; a < G.order; ++a)
        for (int b = 0; b < G.order; ++b)
            if (f[G.mul(a, b)] != H.mul(f[a], f[b])) return {};
    std::vector<bool> seen(H.order, false);
    for (int g = 0; g < G.order; ++g) {
        if (seen[f[g]]) return {};
        seen[f[g]] = true;
    }
    return f;
}

} // namespace

std::vector<GroupAutomorphism> aut_chi_z(const FiniteGroup& G, const Character& chi, int z,
                                         int max_order) {
    if (G.order > max_order)
        throw std::invalid_argument("aut_chi_z: group order exceeds brute-force bound");
    std::vector<int> gens = generating_set(G);
    if (gens.empty()) gens.push_back(G.identity); // trivial group
    // candidate images: same element order and same character value
    std::vector<std::vector<int>> cand(gens.size());
    for (size_t t = 0; t < gens.size(); ++t) {
        int o = G.element_order(gens[t]);
        for (int h = 0; h < G.order; ++h)
            if (G.element_order(h) == o && chi.exp[h] == chi.exp[gens[t]]) cand[t].push_back(h);
    }
    std::set<GroupAutomorphism> found;
    std::vector<int> imgs(gens.size());
    auto rec = [&](auto&& self, size_t t) -> void {
        if (t == gens.size()) {
            std::vector<int> f = extend_hom(G, G, gens, imgs);
            if (f.empty()) return;
            GroupAutomorphism a{f};
            if (a.perm[z] != z) return;
            for (int g = 0; g < G.order; ++g)
                if (chi.exp[a.perm[g]] != chi.exp[g]) return;
            found.insert(std::move(a));
            return;
        }
        for (int c : cand[t]) {
            imgs[t] = c;
            self(self, t + 1);
        }
    };
    rec(rec, 0);
    std::vector<GroupAutomorphism> out(found.begin(), found.end());
    // subgroup sanity: closed under composition and inverse
    for (const auto& a : out) {
        if (found.find(inverse(a)) == found.end())
            throw std::logic_error("aut_chi_z: result not closed under inverse");
        for (const auto& b : out)
            if (found.find(compose(a, b)) == found.end())
                throw std::logic_error("aut_chi_z: result not closed under composition");
    }
    return out;
}

std::optional<std::vector<int>> find_isomorphism(const FiniteGroup& G, const FiniteGroup& H) {
    if (G.order != H.order) return std::nullopt;
    std::vector<int> gens = generating_set(G);
    if (gens.empty()) return std::vector<int>{H.identity};
    std::vector<std::vector<int>> cand(gens.size());
    for (size_t t = 0; t < gens.size(); ++t) {
        int o = G.element_order(gens[t]);
        for (int h = 0; h < H.order; ++h)
            if (H.element_order(h) == o) cand[t].push_back(h);
    }
    std::vector<int> imgs(gens.size());
    std::optional<std::vector<int>> result;
    auto rec = [&](auto&& self, size_t t) -> bool {
        if (t == gens.size()) {
            std::vector<int> f = extend_hom(G, H, gens, imgs);
            if (f.empty()) return false;
            result = f;
            return true;
        }
        for (int c : cand[t]) {
            imgs[t] = c;
            if (self(self, t + 1)) return true;
        }
        return false;
    };
    rec(rec, 0);
    return result;
}

SemidirectOpp semidirect_opp(const FiniteGroup& G, const Character& chi, int z, int max_order) {
    SemidirectOpp S;
    S.auts = aut_chi_z(G, chi, z, max_order);
    S.gcount = G.order;
    int A = (int)S.auts.size();
    int N = G.order * A;
    std::map<std::vector<int>, int> aidx;
    for (int a = 0; a < A; ++a) aidx[S.auts[a].perm] = a;
    std::vector<std::vector<int>> tbl(N, std::vector<int>(N));
    for (int g = 0; g < G.order; ++g)
        for (int a = 0; a < A; ++a)
            for (int h = 0; h < G.order; ++h)
                for (int b = 0; b < A; ++b) {
                    // (g,a)(h,b) = (b(g)h, b o a)
                    int gpart = G.mul(S.auts[b].apply(g), h);
                    int apart = aidx.at(compose(S.auts[b], S.auts[a]).perm);
                    tbl[g * A + a][h * A + b] = gpart * A + apart;
                }
    std::vector<std::string> labels(N);
    for (int g = 0; g < G.order; ++g)
        for (int a = 0; a < A; ++a)
            labels[g * A + a] = "(" + G.label(g) + ";a" + std::to_string(a) + ")";
    S.base = FiniteGroup::from_table(std::move(tbl), std::move(labels));
    return S;
}

} // namespace hdw
