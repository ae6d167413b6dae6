#include "hdw/dump.hpp"

#include <algorithm>
#include <sstream>

namespace hdw {

namespace {

std::string coeff_terms(const TermVec& t, const Basis& basis) {
    if (t.empty()) return "[]";
    std::string out = "[";
    bool first = true;
    for (const auto& term : t) {
        if (!first) out += ", ";
        first = false;
        out += term.c.to_string() + " * " + basis[term.idx];
    }
    return out + "]";
}

std::string coeff_pairs(const PairTermVec& p, const Basis& basis) {
    if (p.empty()) return "[]";
    std::string out = "[";
    bool first = true;
    for (const auto& term : p) {
        if (!first) out += ", ";
        first = false;
        out += term.c.to_string() + " * (" + basis[term.a] + "," + basis[term.b] + ")";
    }
    return out + "]";
}

} // namespace

std::string dump_structure(const HDAlgebra& HD) {
    const Basis& B = HD.H.basis();
    int d = HD.dim();
    std::vector<std::string> lines;

    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            lines.push_back("mu (" + B[i] + "," + B[j] + ") -> " +
                            coeff_terms(HD.H.alg.mul(i, j), B));
    std::sort(lines.begin(), lines.end());
    std::vector<std::string> out = std::move(lines);

    lines.clear();
    for (int i = 0; i < d; ++i) {
        PairTermVec p = HD.H.coalg.comult[i];
        std::sort(p.begin(), p.end(), [](const PairTerm& a, const PairTerm& b) {
            return a.a != b.a ? a.a < b.a : a.b < b.b;
        });
        lines.push_back("Delta (" + B[i] + ") -> " + coeff_pairs(p, B));
    }
    std::sort(lines.begin(), lines.end());
    out.insert(out.end(), lines.begin(), lines.end());

    lines.clear();
    for (int i = 0; i < d; ++i)
        lines.push_back("eps (" + B[i] + ") -> " + HD.H.coalg.counit[i].to_string());
    std::sort(lines.begin(), lines.end());
    out.insert(out.end(), lines.begin(), lines.end());

    lines.clear();
    for (int i = 0; i < d; ++i)
        lines.push_back("S (" + B[i] + ") -> " + coeff_terms(HD.H.antipode->column(i), B));
    std::sort(lines.begin(), lines.end());
    out.insert(out.end(), lines.begin(), lines.end());

    lines.clear();
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            TermVec col = HD.H.braid.column(i * d + j);
            PairTermVec p;
            for (const auto& t : col) p.push_back({t.idx / d, t.idx % d, t.c});
            lines.push_back("c (" + B[i] + "," + B[j] + ") -> " + coeff_pairs(p, B));
        }
    std::sort(lines.begin(), lines.end());
    out.insert(out.end(), lines.begin(), lines.end());

    std::ostringstream ss;
    for (const auto& l : out) ss << l << "\n";
    return ss.str();
}

} // namespace hdw
