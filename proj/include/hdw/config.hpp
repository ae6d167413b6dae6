#pragma once

#include <map>
#include <optional>
#include <stdexcept>

#include "hdw/comodalg.hpp"
#include "hdw/cleft.hpp"

namespace hdw {

/// Parse error with source location.
struct ConfigError : std::runtime_error {
    int line, col;
    ConfigError(int l, int c, const std::string& msg)
        : std::runtime_error(std::to_string(l) + ":" + std::to_string(c) + ": " + msg),
          line(l), col(c) {}
};

struct ComodalgConfig {
    bool regular = false;
    std::vector<std::string> basis;
    Vec unit;
    std::map<std::pair<int, int>, Vec> mult;
    std::vector<int> deg_g;   // group element per basis label
    std::vector<int> deg_aut; // automorphism index per basis label
    std::vector<std::vector<CycNum>> alpha, ladder; // rows
};

struct CleftConfig {
    bool regular = false;
    std::optional<Vec> b_x;
    std::map<int, Vec> b_g; // by group element index
};

/// Parsed and validated workbench configuration: the session field, the
/// datum, and optional comodule-algebra and cleft blocks.
struct WorkbenchConfig {
    Field fld;
    FiniteGroup group;
    Character chi;
    int z = 0;
    CycNum lambda, q;
    std::optional<ComodalgConfig> comodalg;
    std::optional<CleftConfig> cleft;

    DatumD datum() const { return DatumD{group, chi, z, lambda, q}; }
};

/// Scalar literal grammar: sums/products of rat(p/q), zeta(k), integer
/// literals, unary minus and parentheses.
CycNum parse_scalar(const std::string& text, const Field& fld);

/// Group word grammar: "1" or parts like g1, g2^3, g1^-1 joined by '*'
/// (generator names for cyclic-factor groups, element labels otherwise).
int parse_group_word(const std::string& text, const FiniteGroup& G);

WorkbenchConfig parse_config(const std::string& text, const std::string& filename = "<config>");
WorkbenchConfig parse_config_file(const std::string& path);

/// Materialize the comodule-algebra block against a built H_D.
ComoduleAlgebraData realize_comodalg(const ComodalgConfig& cfg, const HDAlgebra& HD,
                                     const AutContext& ctx);
/// Materialize the cleft block (regular or explicit vectors).
CleftDatum realize_cleft(const CleftConfig& cfg, const HDAlgebra& HD);

} // namespace hdw
