#pragma once

#include "hdw/cleft.hpp"

namespace hdw {

/// Session field order from the orders of all roots of unity in a datum.
int choose_field_order(const std::vector<int>& root_orders);

struct Fixture {
    Field fld;
    DatumD datum;
    std::string name;
};

/// (C2 x C2 x C2, chi(g1)=chi(g2)=chi(g3)=-1, z=g1 g2 g3, lambda=1, q=1).
Fixture fixture_first_example();
/// (C6, chi(g)=xi with xi^3=1, z=g, lambda=1, q=xi).
Fixture fixture_second_example();
/// Taft datum (C_n, chi(g) = primitive n-th root, z=g, lambda=1, q=1).
Fixture fixture_taft(int n);

/// Build + full braided-Hopf verification + Aut_{chi,z} facts, as the
/// fixtures command reports them.
Report fixture_report(const Fixture& fx, int max_group_order = 64);

/// The printed action/cocycle tables of the two worked examples, evaluated
/// cell by cell against the definitional rho and sigma.  Agreements and
/// discrepancies are informative entries.
Report evaluate_printed_tables_first_example(const CleftContext& cc, const CleftDatum& d,
                                             const LinMap& rho, const LinMap& sigma);
Report evaluate_printed_tables_second_example(const CleftContext& cc, const CleftDatum& d,
                                              const LinMap& rho, const LinMap& sigma);

/// The regular cleft datum b_g = g, b_x = x on B = H_D.
CleftDatum regular_cleft_datum(const HDAlgebra& HD);

} // namespace hdw
