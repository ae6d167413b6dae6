#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hdw/cyclotomic.hpp"

namespace hdw {

/// Finite group stored extensionally as a Cayley table.  Elements are
/// indices; parsing of generator words happens at the CLI boundary.
struct FiniteGroup {
    int order = 0;
    std::vector<int> table;      // table[a*order+b] = a*b
    int identity = 0;
    std::vector<int> inverse;
    std::vector<std::string> labels;
    std::vector<int> generators; // canonical generators where known

    int mul(int a, int b) const { return table[a * order + b]; }
    int inv(int a) const { return inverse[a]; }
    int pow(int a, long long e) const;
    int element_order(int a) const;
    const std::string& label(int a) const { return labels[a]; }

    /// Validates associativity, identity and inverses; throws on violation.
    static FiniteGroup from_table(std::vector<std::vector<int>> tbl,
                                  std::vector<std::string> labels = {});
    /// Direct product of cyclic groups with canonical generators g1, g2, ...
    static FiniteGroup from_cyclic_factors(const std::vector<int>& orders);
};

/// Symmetric group S_n as a Cayley table (used as an isomorphism target).
FiniteGroup symmetric_group(int n);

bool is_central(const FiniteGroup& G, int z);

/// Root-of-unity valued character, stored as exponents of zeta_m.
struct Character {
    int m = 1;
    std::vector<int> exp; // chi(g) = zeta_m^exp[g]

    CycNum value(const Field& fld, int g) const;
    CycNum value_pow(const Field& fld, int g, long long k) const; // chi(g)^k
    int order() const; // least n with chi^n = 1

    static Character trivial(const FiniteGroup& G, int m);
    /// chi given by exponents on the canonical generators of a cyclic-factor
    /// group; extended multiplicatively and validated.
    static Character from_generator_exponents(const FiniteGroup& G, int m,
                                              const std::vector<int>& gen_exp);
    /// chi given on every element.
    static Character from_values(const FiniteGroup& G, int m, std::vector<int> exps);
    bool validate(const FiniteGroup& G) const; // chi(gh) = chi(g)chi(h), chi(1)=1
};

struct GroupAutomorphism {
    std::vector<int> perm; // image of each element index

    int apply(int g) const { return perm[g]; }
    bool is_identity() const;
    friend bool operator==(const GroupAutomorphism& a, const GroupAutomorphism& b) {
        return a.perm == b.perm;
    }
    friend bool operator<(const GroupAutomorphism& a, const GroupAutomorphism& b) {
        return a.perm < b.perm;
    }
};

GroupAutomorphism compose(const GroupAutomorphism& a, const GroupAutomorphism& b); // a after b
GroupAutomorphism inverse(const GroupAutomorphism& a);
bool is_automorphism(const FiniteGroup& G, const GroupAutomorphism& a);

/// All automorphisms phi with phi(z) = z and chi o phi = chi, by brute force
/// over images of a computed generating set.  Throws when |G| exceeds the
/// bound.  The result is sorted and closed under composition and inverse.
std::vector<GroupAutomorphism> aut_chi_z(const FiniteGroup& G, const Character& chi, int z,
                                         int max_order = 64);

/// Minimal-ish generating set, greedy over element indices.
std::vector<int> generating_set(const FiniteGroup& G);

/// Isomorphism search between small groups (backtracking over generator
/// images).  Returns an element bijection h with h(ab) = h(a)h(b).
std::optional<std::vector<int>> find_isomorphism(const FiniteGroup& G, const FiniteGroup& H);

/// The group G(chi,z)^op on pairs (g, zeta) with product
/// (g,a)(h,b) = (b(g)h, b o a), as fixed by the concrete product display of
/// the first worked example.
struct SemidirectOpp {
    FiniteGroup base;                       // pairs as a validated Cayley table
    std::vector<GroupAutomorphism> auts;    // the Aut_{chi,z}(G) list used
    int gcount = 0;

    int pair_index(int g, int a) const { return g * (int)auts.size() + a; }
    std::pair<int, int> unpair(int p) const {
        return {p / (int)auts.size(), p % (int)auts.size()};
    }
};

SemidirectOpp semidirect_opp(const FiniteGroup& G, const Character& chi, int z,
                             int max_order = 64);

} // namespace hdw
