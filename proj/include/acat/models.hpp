#pragma once

#include <variant>

#include "acat/cup.hpp"
#include "acat/nerve.hpp"

namespace acat {

// Built-in models: the parallel-pair circle S, the disk D, the torus T with
// its three projections to S, the two solid-torus cylinders M and N, their
// amalgamation P with the induced functor H : P -> Q onto the two-cone sphere
// Q, the cone over P, and the glued model R.
struct HopfModels {
  CatPtr S, D, T;
  Functor FM, FN, G;          // T -> S
  CylinderResult cylM, cylN;  // cylinders of FM, FN
  Functor inclSD;             // S -> D
  Functor HM, HN;             // M -> D, N -> D
  ArrowPushout hopf;          // domain P, codomain Q, mediating H
  CylinderResult coneP;
  PushoutResult R;            // pushout of cone(P) <- P -> Q
  Functor counterexample;     // point into the interval, hitting the source end
};

// Deterministic; throws on any internal consistency failure.
const HopfModels& hopf_models();

// Rebuild with a replacement for the projection F_M (fault-injection hook).
HopfModels build_hopf_models(const std::optional<Functor>& fm_override);

using ModelValue = std::variant<CatPtr, Functor>;
std::vector<std::string> model_names();
bool is_model_name(const std::string& name);
ModelValue build_model(const std::string& name);

struct VerifyStep {
  std::string name;
  bool passed = false;
  bool informational = false;
  std::string detail;
};

struct VerifyReport {
  std::string suite;
  std::vector<VerifyStep> steps;
  bool passed = false;  // ignores informational steps

  std::string to_text() const;
};

// The full pipeline: model validity, the cylinder criterion for the three
// projections, pushout preservation, the homology table, the counterexample,
// the cup-square of the mapping cone, and (informationally) the comparison of
// the glued model R with the simplicial mapping cone.
VerifyReport verify_hopf();
VerifyReport verify_hopf_with(const std::optional<Functor>& fm_override);

// Criterion and comparison-map check for one functor.
VerifyReport verify_cylinder(const Functor& f);

}  // namespace acat
