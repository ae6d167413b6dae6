#include "hdw/tensor.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace hdw {

bool labels_distinct(const Basis& b) {
    std::set<std::string> s(b.labels.begin(), b.labels.end());
    return (int)s.size() == b.dim();
}

std::string pair_label(const Basis& a, const Basis& b, int i, int j) {
    return a[i] + "|" + b[j];
}

Vec zero_vec(int dim, const Field& f) { return Vec(dim, f->zero()); }

Vec unit_vec(int dim, int idx, const Field& f) {
    Vec v = zero_vec(dim, f);
    v[idx] = f->one();
    return v;
}

bool vec_is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const CycNum& c) { return c.is_zero(); });
}

bool vec_eq(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

Vec vec_add(const Vec& a, const Vec& b) {
    Vec r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] = r[i] + b[i];
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    Vec r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] = r[i] - b[i];
    return r;
}

Vec vec_scale(const CycNum& s, const Vec& a) {
    Vec r(a);
    for (auto& x : r) x = s * x;
    return r;
}

TermVec to_terms(const Vec& v) {
    TermVec t;
    for (int i = 0; i < (int)v.size(); ++i)
        if (!v[i].is_zero()) t.push_back({i, v[i]});
    return t;
}

Vec to_vec(const TermVec& t, int dim, const Field& f) {
    Vec v = zero_vec(dim, f);
    for (const auto& term : t) v[term.idx] = v[term.idx] + term.c;
    return v;
}

void add_term(TermVec& acc, int idx, const CycNum& c) {
    if (!c.is_zero()) acc.push_back({idx, c});
}

TermVec normalize_terms(TermVec t) {
    std::sort(t.begin(), t.end(), [](const Term& a, const Term& b) { return a.idx < b.idx; });
    TermVec out;
    for (auto& term : t) {
        if (!out.empty() && out.back().idx == term.idx)
            out.back().c = out.back().c + term.c;
        else
            out.push_back(term);
    }
    out.erase(std::remove_if(out.begin(), out.end(),
                             [](const Term& a) { return a.c.is_zero(); }),
              out.end());
    return out;
}

std::string terms_to_string(const TermVec& t, const Basis& basis) {
    if (t.empty()) return "0";
    std::string out;
    for (const auto& term : t) {
        if (!out.empty()) out += " + ";
        out += "(" + term.c.to_string() + ")*" + basis[term.idx];
    }
    return out;
}

LinMap::LinMap(int r, int c, const Field& f) : rows(r), cols(c), fld(f), a((size_t)r * c, f->zero()) {}

LinMap LinMap::identity(int n, const Field& f) {
    LinMap m(n, n, f);
    for (int i = 0; i < n; ++i) m.at(i, i) = f->one();
    return m;
}

Vec LinMap::apply(const Vec& v) const {
    if ((int)v.size() != cols) throw std::invalid_argument("LinMap::apply: dimension mismatch");
    Vec r = zero_vec(rows, fld);
    for (int c = 0; c < cols; ++c) {
        if (v[c].is_zero()) continue;
        for (int rr = 0; rr < rows; ++rr) {
            const CycNum& m = at(rr, c);
            if (!m.is_zero()) r[rr] = r[rr] + m * v[c];
        }
    }
    return r;
}

TermVec LinMap::apply_terms(const TermVec& t) const {
    TermVec out;
    for (const auto& term : t) {
        if (term.idx >= cols) throw std::invalid_argument("LinMap::apply_terms: index");
        for (int rr = 0; rr < rows; ++rr) {
            const CycNum& m = at(rr, term.idx);
            if (!m.is_zero()) out.push_back({rr, m * term.c});
        }
    }
    return normalize_terms(std::move(out));
}

TermVec LinMap::column(int c) const {
    TermVec out;
    for (int r = 0; r < rows; ++r)
        if (!at(r, c).is_zero()) out.push_back({r, at(r, c)});
    return out;
}

void LinMap::set_column(int c, const TermVec& t) {
    for (int r = 0; r < rows; ++r) at(r, c) = fld->zero();
    for (const auto& term : t) at(term.idx, c) = at(term.idx, c) + term.c;
}

void LinMap::set_column(int c, const Vec& v) {
    if ((int)v.size() != rows) throw std::invalid_argument("set_column: dimension");
    for (int r = 0; r < rows; ++r) at(r, c) = v[r];
}

bool operator==(const LinMap& x, const LinMap& y) {
    if (x.rows != y.rows || x.cols != y.cols) return false;
    for (size_t i = 0; i < x.a.size(); ++i)
        if (x.a[i] != y.a[i]) return false;
    return true;
}

LinMap tensor_map(const LinMap& f, const LinMap& g) {
    LinMap r(f.rows * g.rows, f.cols * g.cols, f.fld);
    for (int fc = 0; fc < f.cols; ++fc)
        for (int fr = 0; fr < f.rows; ++fr) {
            const CycNum& fv = f.at(fr, fc);
            if (fv.is_zero()) continue;
            for (int gc = 0; gc < g.cols; ++gc)
                for (int gr = 0; gr < g.rows; ++gr) {
                    const CycNum& gv = g.at(gr, gc);
                    if (gv.is_zero()) continue;
                    r.at(fr * g.rows + gr, fc * g.cols + gc) = fv * gv;
                }
        }
    return r;
}

LinMap compose(const LinMap& f, const LinMap& g) {
    if (f.cols != g.rows) throw std::invalid_argument("compose: dimension mismatch");
    LinMap r(f.rows, g.cols, f.fld);
    for (int c = 0; c < g.cols; ++c) {
        for (int k = 0; k < g.rows; ++k) {
            const CycNum& gv = g.at(k, c);
            if (gv.is_zero()) continue;
            for (int rr = 0; rr < f.rows; ++rr) {
                const CycNum& fv = f.at(rr, k);
                if (!fv.is_zero()) r.at(rr, c) = r.at(rr, c) + fv * gv;
            }
        }
    }
    return r;
}

Vec apply(const LinMap& f, const Vec& v) { return f.apply(v); }

LinMap flip_map(int da, int db, const Field& f) {
    LinMap r(da * db, da * db, f);
    for (int i = 0; i < da; ++i)
        for (int j = 0; j < db; ++j) r.at(j * da + i, i * db + j) = f->one();
    return r;
}

LinMap map_sub(const LinMap& f, const LinMap& g) {
    if (f.rows != g.rows || f.cols != g.cols) throw std::invalid_argument("map_sub: shape");
    LinMap r = f;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = r.a[i] - g.a[i];
    return r;
}

bool map_is_zero(const LinMap& f) {
    return std::all_of(f.a.begin(), f.a.end(), [](const CycNum& c) { return c.is_zero(); });
}

namespace {

// row echelon; returns pivot column per used row
std::vector<int> echelon(LinMap& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int p = -1;
        for (int r = row; r < m.rows; ++r)
            if (!m.at(r, col).is_zero()) { p = r; break; }
        if (p < 0) continue;
        if (p != row)
            for (int c = 0; c < m.cols; ++c) std::swap(m.at(p, c), m.at(row, c));
        CycNum invp = m.at(row, col).inv();
        for (int c = col; c < m.cols; ++c) m.at(row, c) = m.at(row, c) * invp;
        for (int r = 0; r < m.rows; ++r) {
            if (r == row || m.at(r, col).is_zero()) continue;
            CycNum f = m.at(r, col);
            for (int c = col; c < m.cols; ++c) m.at(r, c) = m.at(r, c) - f * m.at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

int rank(LinMap m) { return (int)echelon(m).size(); }

std::optional<Vec> solve(const LinMap& A, const Vec& b) {
    if ((int)b.size() != A.rows) throw std::invalid_argument("solve: dimension");
    LinMap aug(A.rows, A.cols + 1, A.fld);
    for (int r = 0; r < A.rows; ++r) {
        for (int c = 0; c < A.cols; ++c) aug.at(r, c) = A.at(r, c);
        aug.at(r, A.cols) = b[r];
    }
    std::vector<int> pivots = echelon(aug);
    for (int p : pivots)
        if (p == A.cols) return std::nullopt; // inconsistent
    Vec x = zero_vec(A.cols, A.fld);
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at((int)r, A.cols);
    return x;
}

std::vector<Vec> nullspace(const LinMap& A) {
    LinMap m = A;
    std::vector<int> pivots = echelon(m);
    std::vector<bool> is_pivot(A.cols, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (int free = 0; free < A.cols; ++free) {
        if (is_pivot[free]) continue;
        Vec v = zero_vec(A.cols, A.fld);
        v[free] = A.fld->one();
        for (size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -m.at((int)r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<LinMap> inverse_map(const LinMap& A) {
    if (A.rows != A.cols) return std::nullopt;
    int n = A.rows;
    LinMap aug(n, 2 * n, A.fld);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) aug.at(r, c) = A.at(r, c);
        aug.at(r, n + r) = A.fld->one();
    }
    std::vector<int> pivots = echelon(aug);
    if ((int)pivots.size() < n || pivots[n - 1] >= n) return std::nullopt;
    for (int r = 0; r < n; ++r)
        if (pivots[r] != r) return std::nullopt;
    LinMap inv(n, n, A.fld);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) inv.at(r, c) = aug.at(r, n + c);
    return inv;
}

std::optional<Vec> coords_in_span(const std::vector<Vec>& span, const Vec& v, const Field& f) {
    int dim = (int)v.size();
    LinMap A(dim, (int)span.size(), f);
    for (int c = 0; c < (int)span.size(); ++c)
        for (int r = 0; r < dim; ++r) A.at(r, c) = span[c][r];
    return solve(A, v);
}

TermVec FDAlgebra::mul_terms(const TermVec& x, const TermVec& y) const {
    TermVec out;
    for (const auto& tx : x)
        for (const auto& ty : y) {
            CycNum s = tx.c * ty.c;
            if (s.is_zero()) continue;
            for (const auto& tm : mul(tx.idx, ty.idx)) out.push_back({tm.idx, s * tm.c});
        }
    return normalize_terms(std::move(out));
}

Vec FDAlgebra::mul_vec(const Vec& x, const Vec& y) const {
    return to_vec(mul_terms(to_terms(x), to_terms(y)), dim(), fld);
}

Vec FDAlgebra::unit_vec() const { return to_vec(unit, dim(), fld); }

Vec FDAlgebra::power(const Vec& x, long long e) const {
    if (e < 0) throw std::invalid_argument("FDAlgebra::power: e >= 0");
    Vec acc = unit_vec();
    for (long long i = 0; i < e; ++i) acc = mul_vec(acc, x);
    return acc;
}

FDAlgebra twisted_tensor_algebra(const FDAlgebra& A, const FDAlgebra& B, const LinMap& c) {
    int da = A.dim(), db = B.dim();
    if (c.rows != da * db || c.cols != db * da)
        throw std::invalid_argument("twisted_tensor_algebra: braid shape");
    FDAlgebra R;
    R.fld = A.fld;
    for (int i = 0; i < da; ++i)
        for (int j = 0; j < db; ++j) R.basis.labels.push_back(pair_label(A.basis, B.basis, i, j));
    int dim = da * db;
    R.mult.resize((size_t)dim * dim);
    for (int i = 0; i < da; ++i)
        for (int j = 0; j < db; ++j)
            for (int k = 0; k < da; ++k)
                for (int l = 0; l < db; ++l) {
                    // (e_i (x) f_j)(e_k (x) f_l) = (mu_A (x) mu_B)(e_i (x) c(f_j (x) e_k) (x) f_l)
                    TermVec out;
                    TermVec cc = c.column(j * da + k); // indices a*db+b over A(x)B
                    for (const auto& t : cc) {
                        int a = t.idx / db, b = t.idx % db;
                        for (const auto& ta : A.mul(i, a))
                            for (const auto& tb : B.mul(b, l))
                                out.push_back({ta.idx * db + tb.idx, t.c * ta.c * tb.c});
                    }
                    R.mult[(size_t)(i * db + j) * dim + (k * db + l)] = normalize_terms(std::move(out));
                }
    for (const auto& ta : A.unit)
        for (const auto& tb : B.unit) R.unit.push_back({ta.idx * db + tb.idx, ta.c * tb.c});
    R.unit = normalize_terms(std::move(R.unit));
    return R;
}

FDCoalgebra twisted_tensor_coalgebra(const FDCoalgebra& C, const FDCoalgebra& D, const LinMap& c) {
    int dc = C.dim(), dd = D.dim();
    if (c.rows != dd * dc || c.cols != dc * dd)
        throw std::invalid_argument("twisted_tensor_coalgebra: braid shape");
    FDCoalgebra R;
    R.fld = C.fld;
    for (int i = 0; i < dc; ++i)
        for (int j = 0; j < dd; ++j) R.basis.labels.push_back(pair_label(C.basis, D.basis, i, j));
    int dim = dc * dd;
    R.comult.resize(dim);
    R.counit.assign(dim, C.fld->zero());
    for (int i = 0; i < dc; ++i)
        for (int j = 0; j < dd; ++j) {
            // Delta(e_i (x) f_j) = (C (x) c (x) D)(Delta_C(e_i) (x) Delta_D(f_j))
            PairTermVec out;
            for (const auto& pc : C.comult[i])
                for (const auto& pd : D.comult[j]) {
                    TermVec cc = c.column(pc.b * dd + pd.a); // c : C(x)D -> D(x)C
                    for (const auto& t : cc) {
                        int d1 = t.idx / dc, c2 = t.idx % dc;
                        out.push_back({pc.a * dd + d1, c2 * dd + pd.b, pc.c * pd.c * t.c});
                    }
                }
            R.comult[i * dd + j] = std::move(out);
            R.counit[i * dd + j] = C.counit[i] * D.counit[j];
        }
    return R;
}

LinMap convolution(const LinMap& f, const LinMap& g, const FDCoalgebra& C, const FDAlgebra& A) {
    if (f.cols != C.dim() || g.cols != C.dim() || f.rows != A.dim() || g.rows != A.dim())
        throw std::invalid_argument("convolution: shape mismatch");
    LinMap r(A.dim(), C.dim(), A.fld);
    for (int c = 0; c < C.dim(); ++c) {
        TermVec acc;
        for (const auto& p : C.comult[c]) {
            TermVec prod = A.mul_terms(f.column(p.a), g.column(p.b));
            for (auto& t : prod) acc.push_back({t.idx, p.c * t.c});
        }
        r.set_column(c, normalize_terms(std::move(acc)));
    }
    return r;
}

LinMap conv_unit(const FDCoalgebra& C, const FDAlgebra& A) {
    LinMap r(A.dim(), C.dim(), A.fld);
    Vec u = A.unit_vec();
    for (int c = 0; c < C.dim(); ++c)
        r.set_column(c, vec_scale(C.counit[c], u));
    return r;
}

std::optional<LinMap> conv_inverse(const LinMap& f, const FDCoalgebra& C, const FDAlgebra& A) {
    // Solve (f * g) = eta o eps as a linear system in the entries of g.
    // Unknown g is (dimA x dimC); variable index v = a*dimC + c.
    int dA = A.dim(), dC = C.dim();
    LinMap sys(dA * dC, dA * dC, A.fld);
    for (int c = 0; c < dC; ++c) {
        for (const auto& p : C.comult[c]) {
            // contribution of g[:, p.b] through f(e_{p.a}) * e_x
            TermVec fcol = f.column(p.a);
            for (int x = 0; x < dA; ++x) {
                TermVec prod;
                for (const auto& tf : fcol)
                    for (const auto& tm : A.mul(tf.idx, x)) prod.push_back({tm.idx, tf.c * tm.c});
                prod = normalize_terms(std::move(prod));
                for (const auto& t : prod) {
                    int rowidx = t.idx * dC + c;
                    int validx = x * dC + p.b;
                    sys.at(rowidx, validx) = sys.at(rowidx, validx) + p.c * t.c;
                }
            }
        }
    }
    Vec rhs = zero_vec(dA * dC, A.fld);
    Vec u = A.unit_vec();
    for (int c = 0; c < dC; ++c)
        for (int x = 0; x < dA; ++x) rhs[x * dC + c] = C.counit[c] * u[x];
    auto sol = solve(sys, rhs);
    if (!sol) return std::nullopt;
    LinMap g(dA, dC, A.fld);
    for (int x = 0; x < dA; ++x)
        for (int c = 0; c < dC; ++c) g.at(x, c) = (*sol)[x * dC + c];
    // a right convolution inverse in a finite-dimensional convolution algebra
    // is two-sided; confirm exactly
    if (!(convolution(f, g, C, A) == conv_unit(C, A))) return std::nullopt;
    if (!(convolution(g, f, C, A) == conv_unit(C, A))) return std::nullopt;
    return g;
}

std::optional<Vec> element_inverse(const FDAlgebra& A, const Vec& x) {
    int n = A.dim();
    LinMap L(n, n, A.fld); // left multiplication by x
    for (int c = 0; c < n; ++c)
        L.set_column(c, A.mul_terms(to_terms(x), {{c, A.fld->one()}}));
    auto sol = solve(L, A.unit_vec());
    if (!sol) return std::nullopt;
    if (!vec_eq(A.mul_vec(*sol, x), A.unit_vec())) return std::nullopt;
    return sol;
}

Vec element_power(const FDAlgebra& A, const Vec& x, long long e) {
    if (e >= 0) return A.power(x, e);
    auto invx = element_inverse(A, x);
    if (!invx) throw std::domain_error("element_power: element not invertible");
    return A.power(*invx, -e);
}

} // namespace hdw
