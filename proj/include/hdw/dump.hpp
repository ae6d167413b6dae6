#pragma once

#include <string>

#include "hdw/hd.hpp"

namespace hdw {

/// Exact structure-constant tables of mu, Delta, eps, S and the braid, one
/// entry per line, sorted lexicographically; diffable golden-file format.
std::string dump_structure(const HDAlgebra& HD);

} // namespace hdw
