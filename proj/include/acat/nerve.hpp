#pragma once

#include "acat/constructions.hpp"
#include "acat/sset.hpp"

namespace acat {

// Nerve of an acyclic category: n-simplices are length-n chains of composable
// non-identity morphisms.  For a chain (f1, ..., fn) with fi : x_{i-1} -> x_i,
// d_0 drops f1, d_n drops fn and the inner d_i composes f_{i+1} . f_i.
struct NerveResult {
  CatPtr category;
  SSetPtr complex;
  // [dim][index] -> morphism indices of the chain (empty for vertices; the
  // vertex at index i is object i)
  std::vector<std::vector<std::vector<int>>> chains;

  SimplexRef simplex_of_chain(const std::vector<int>& morphism_indices) const;
  SimplexRef vertex_of_object(int object_index) const { return {0, object_index}; }
};

NerveResult nerve(const CatPtr& c);

// Simplicial map induced by a functor; identity images are collapsed into
// canonical form.
SimplicialMap nerve_map(const Functor& f, const NerveResult& src, const NerveResult& tgt);

struct SimplicialCylinder {
  ProductWithArrow product;   // A x 2
  NerveResult nerve_source;   // N(A)
  NerveResult nerve_product;  // N(A x 2)
  NerveResult nerve_target;   // N(B)
  SimplicialPushout pushout;  // N(A x 2) glued to N(B) along the top copy of N(A)
};

SimplicialCylinder simplicial_mapping_cylinder(const Functor& f);

struct ComparisonResult {
  CylinderResult cylinder;      // categorical cylinder M_F
  NerveResult nerve_cylinder;   // N(M_F)
  SimplicialCylinder simplicial;
  SimplicialMap k;              // simplicial cylinder -> N(M_F)
  // nondegenerate simplices of N(M_F) with no preimage under k, per dimension
  std::vector<std::vector<std::string>> missed;
  bool surjective() const;
};

ComparisonResult comparison_k(const Functor& f);

// Whether every morphism out of an image object lifts: for every x in the
// source and g : F(x) -> y there is f with domain x and F(f) = g.
bool cylinder_condition(const Functor& f);
// A failing pair (x, g), if any.
std::optional<std::pair<std::string, std::string>> cylinder_condition_failure(const Functor& f);

struct PushoutComparison {
  SimplicialPushout simplicial;  // pushout of nerves
  SimplicialMap mediating;       // to the nerve of the categorical pushout
  NerveResult nerve_apex;
};

// Mediating map from the pushout of nerves to the nerve of the pushout.
PushoutComparison pushout_comparison(const PushoutResult& po);

}  // namespace acat
