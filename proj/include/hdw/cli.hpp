#pragma once

#include "hdw/config.hpp"
#include "hdw/dump.hpp"
#include "hdw/fixtures.hpp"

namespace hdw {

struct CommandOptions {
    int max_group_order = 64;
    bool experimental_diagrams = false;
};

/// Datum validation plus the full braided-Hopf verification of H_D.
Report cmd_verify_hopf(const WorkbenchConfig& cfg, const CommandOptions& opt);

/// Structure-constant dump of H_D (built and verified first).
std::string cmd_dump_structure(const WorkbenchConfig& cfg);

/// Comodule-algebra validation, construction of (s, nu) and the induced
/// kG-subalgebra facts.  Requires a comodule_algebra block.
Report cmd_verify_comodule_algebra(const WorkbenchConfig& cfg, const CommandOptions& opt);

/// Full cleft pipeline: datum, gamma, action, cocycle, closed-form
/// cross-checks, invariant elements, crossed product, normal basis, Galois
/// and the round trip.  Labeled rho/sigma tables are appended to tables_out
/// when non-null.
Report cmd_cleft(const WorkbenchConfig& cfg, const CommandOptions& opt,
                 std::string* tables_out = nullptr);

/// The two worked examples plus the Taft ladder n = 2..5.
Report cmd_fixtures(const CommandOptions& opt);

} // namespace hdw
