#pragma once

#include <string>
#include <unordered_map>

#include "acat/category.hpp"

namespace acat {

struct CheckResult {
  bool ok = true;
  std::string witness;  // empty when ok
  explicit operator bool() const { return ok; }
  static CheckResult pass() { return {true, ""}; }
  static CheckResult fail(std::string w) { return {false, std::move(w)}; }
};

struct Functor {
  CatPtr source, target;
  std::unordered_map<std::string, std::string> object_map;
  std::unordered_map<std::string, std::string> morphism_map;

  const std::string& obj(const std::string& x) const;
  const std::string& mor(const std::string& f) const;
  int obj_index(const std::string& x) const { return target->object_index(obj(x)); }
  int mor_index(const std::string& f) const { return target->morphism_index(mor(f)); }
};

// Exhaustive validation: totality, endpoint/identity preservation, all composites.
CheckResult check_functor(const Functor& f);

Functor identity_functor(const CatPtr& c);
Functor compose_functors(const Functor& g, const Functor& f);  // g after f
bool same_functor(const Functor& a, const Functor& b);
bool injective_on_objects(const Functor& f);

// Build a functor from images of a generating set: identities are filled in,
// composites are derived by closure over the composition table.
Functor functor_from_generators(const CatPtr& source, const CatPtr& target,
                                const std::unordered_map<std::string, std::string>& object_map,
                                const std::unordered_map<std::string, std::string>& generator_map);

struct NaturalTransformation {
  Functor source, target;  // parallel functors
  std::unordered_map<std::string, std::string> components;  // object -> morphism of codomain

  const std::string& at(const std::string& x) const;
};

CheckResult check_natural(const NaturalTransformation& a);

}  // namespace acat
