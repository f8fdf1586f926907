#pragma once

#include <map>

#include "acat/realize.hpp"

namespace acat {

// Mapping cylinder of F : A -> B as the collage: objects of A and B side by
// side, cross hom(x, y) = B(Fx, y), nothing from B back to A.  The seam is the
// natural transformation with component x -> Fx given by the identity cross
// morphism.
struct CylinderResult {
  Functor base;  // the F the cylinder was built from
  CatPtr cylinder;
  Functor include_source;  // A -> M_F
  Functor include_target;  // B -> M_F
  NaturalTransformation seam;  // include_source => include_target . F
  // (A-object, B-morphism id) -> cross morphism id, including identities
  std::map<std::pair<std::string, std::string>, std::string> cross;
  // inverse of cross
  std::map<std::string, std::pair<std::string, std::string>> cross_decode;

  const std::string& cross_id(const std::string& a_obj, const std::string& b_mor) const;
};

CylinderResult mapping_cylinder(const Functor& f);

// Unique functor M_F -> X through the cylinder, given a square H : A -> X,
// K : B -> X and a natural transformation r : H => K . F.
Functor cylinder_factorize(const CylinderResult& cyl, const Functor& h, const Functor& k,
                           const NaturalTransformation& r);

// A x 2 where 2 is the arrow category 0 -> 1.  Morphisms are pairs; levels
// are 0 (stay at 0), 1 (stay at 1) and the cross level 01.
struct ProductWithArrow {
  CatPtr product;
  Functor include_bottom;  // x -> (x,0)
  Functor include_top;     // x -> (x,1)
  enum Level { kBottom = 0, kTop = 1, kStep = 2 };
  std::unordered_map<std::string, std::pair<std::string, int>> decode_morphism;
  std::unordered_map<std::string, std::pair<std::string, int>> decode_object;
};

ProductWithArrow product_with_arrow(const CatPtr& a);

// Cylinder of the unique functor to the point: adds a terminal apex.
CylinderResult cone(const CatPtr& c);

struct PushoutResult {
  Functor span_left, span_right;  // F : A -> B, G : A -> C
  CatPtr apex;
  Functor leg_left;   // B -> apex
  Functor leg_right;  // C -> apex
  // apex morphism id -> its representative path of tagged generators
  std::unordered_map<std::string, std::vector<std::string>> rep_path;
  // tagged generator -> (0 for left / 1 for right, original morphism id)
  std::unordered_map<std::string, std::pair<int, std::string>> gen_origin;
};

// Pushout of B <-F- A -G-> C realized from the merged presentation.  Requires
// F, G injective on objects and sending non-identities to non-identities;
// object classes carry provenance-tagged names, merged classes take the
// lexicographically least tag.
PushoutResult pushout(const Functor& f, const Functor& g, const std::string& tag_left = "L",
                      const std::string& tag_right = "R");

// Mediating functor out of a pushout for a commuting cocone.
Functor pushout_mediate(const PushoutResult& po, const Functor& from_left,
                        const Functor& from_right);

struct CatSquare {
  Functor top;     // A -> B'
  Functor left;    // A -> A0
  Functor right;   // B' -> B0
  Functor bottom;  // A0 -> B0
};

struct ArrowPushout {
  PushoutResult domain;    // pushout of the top edges
  PushoutResult codomain;  // pushout of the bottom edges
  Functor mediating;       // induced functor domain.apex -> codomain.apex
};

// Pushout in the arrow category of two commuting squares over a common
// vertical edge; checks both squares commute.
ArrowPushout arrow_pushout(const CatSquare& left_square, const CatSquare& right_square,
                           const std::string& tag_left = "L", const std::string& tag_right = "R",
                           const std::string& tag_base_left = "L",
                           const std::string& tag_base_right = "R");

// Pushout of cone(P) <-i0- P -H-> Q.  Unlike the general pushout this also
// handles H collapsing morphisms: seam arrows over a collapsed morphism merge.
PushoutResult cone_pushout(const CylinderResult& cone_of_p, const Functor& h);

}  // namespace acat
