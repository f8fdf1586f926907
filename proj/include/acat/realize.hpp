#pragma once

#include "acat/presentation.hpp"

namespace acat {

struct RealizeResult {
  FiniteCategory category;
  CatPtr ptr;  // same category, shared
  // morphism id -> generator names in application order (empty for identities)
  std::unordered_map<std::string, std::vector<std::string>> rep_path;
  // generator name -> id of the morphism its class realizes
  std::unordered_map<std::string, std::string> generator_morphism;
};

// Realize a presentation by enumerating all generator paths and quotienting by
// the congruence the relations generate.  Requires the generator graph to be
// acyclic (no directed cycle, no loop generator); morphism ids are the
// lexicographically least representative paths, rendered target-side first.
RealizeResult realize_category(const CatPresentation& p);

// Present a realized category by all its non-identity morphisms and its full
// composition table.
CatPresentation present_category(const FiniteCategory& c);

}  // namespace acat
