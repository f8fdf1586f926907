#pragma once

#include <memory>

#include "acat/delta.hpp"
#include "acat/functor.hpp"

namespace acat {

struct SimplexRef {
  int dim = 0;
  int index = 0;
  bool operator==(const SimplexRef&) const = default;
};

// A possibly-degenerate simplex in canonical form: a nondegenerate simplex
// together with the monotone surjection collapsing onto it.  The ambient
// dimension is surj.size() - 1.
struct FormalSimplex {
  SimplexRef target;
  MonotoneMap surj;
  int ambient_dim() const { return static_cast<int>(surj.size()) - 1; }
  bool degenerate() const { return ambient_dim() != target.dim; }
  bool operator==(const FormalSimplex&) const = default;
};

FormalSimplex nondeg(SimplexRef r);

// A finite simplicial set presented by its nondegenerate simplices; face
// tables may land in degenerate simplices, recorded in canonical form.
class SemiSimplicialSet {
 public:
  int top_dim() const { return static_cast<int>(names_.size()) - 1; }
  int count(int dim) const;
  int total_count() const;
  const std::string& name(SimplexRef r) const { return names_.at(r.dim).at(r.index); }
  int index_of(int dim, const std::string& name) const;  // -1 when absent
  const FormalSimplex& face(int dim, int index, int i) const;

  // faces.size() must be dim+1 for dim >= 1 and empty for vertices
  int add_simplex(int dim, const std::string& name, std::vector<FormalSimplex> faces);

  // d_i of a formal simplex, via epi-mono factorization through the tables
  FormalSimplex face_of(const FormalSimplex& fs, int i) const;
  // restriction of a nondegenerate simplex along an injection, given by the
  // strictly increasing list of kept vertex positions
  FormalSimplex apply_injection(SimplexRef s, const std::vector<int>& kept_values) const;

  void validate() const;  // shape + simplicial identities in canonical form

 private:
  std::vector<std::vector<std::string>> names_;
  std::vector<std::unordered_map<std::string, int>> index_;
  std::vector<std::vector<std::vector<FormalSimplex>>> faces_;
};

using SSetPtr = std::shared_ptr<const SemiSimplicialSet>;

struct SimplicialMap {
  SSetPtr source, target;
  std::vector<std::vector<FormalSimplex>> image;  // [dim][index]

  const FormalSimplex& apply(SimplexRef r) const { return image.at(r.dim).at(r.index); }
  FormalSimplex apply_formal(const FormalSimplex& fs) const;
};

CheckResult check_simplicial(const SimplicialMap& m);
bool is_simplicial_iso(const SimplicialMap& m);
SimplicialMap compose_maps(const SimplicialMap& g, const SimplicialMap& f);
SimplicialMap identity_map(const SSetPtr& x);

// Pushout of X <-f- A -g-> B where f is dimensionwise injective with
// nondegenerate images.  Nondegenerate simplices of the result are those of B
// plus those of X outside f(A); f(A)-simplices are rerouted through g.
struct SimplicialPushout {
  SSetPtr complex;
  SimplicialMap leg_from_x;  // X -> Y
  SimplicialMap leg_from_b;  // B -> Y
  // provenance of each Y-simplex: ('X', index in X) or ('B', index in B)
  std::vector<std::vector<std::pair<char, int>>> origin;
};

SimplicialPushout simplicial_pushout(const SimplicialMap& f, const SimplicialMap& g);

}  // namespace acat
