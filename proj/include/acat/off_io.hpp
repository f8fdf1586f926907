#pragma once

#include <string>

#include "acat/sset.hpp"

namespace acat {

// OFF mesh of the 2-skeleton.  Vertex coordinates are deterministic points on
// the unit sphere derived from hashing the vertex names; a viewing aid, not a
// geometric embedding.
std::string export_off(const SemiSimplicialSet& x);

}  // namespace acat
