#pragma once

#include "acat/matrix.hpp"
#include "acat/sset.hpp"

namespace acat {

// Normalized chain complex of a simplicial set: one generator per
// nondegenerate simplex, degenerate faces contribute zero.
struct ChainComplex {
  std::vector<int> counts;           // generators per dimension, 0..top
  std::vector<IntMatrix> boundary;   // boundary[n] : C_n -> C_{n-1}; boundary[0] has 0 rows

  int top() const { return static_cast<int>(counts.size()) - 1; }
  void validate() const;  // boundary . boundary == 0, exact
};

ChainComplex chain_complex(const SemiSimplicialSet& x);

long long euler_characteristic(const SemiSimplicialSet& x);

struct HomologyGroup {
  int degree = 0;
  long long betti = 0;
  std::vector<long long> torsion;  // invariant factors > 1, divisibility chain
  bool operator==(const HomologyGroup&) const = default;
};

std::string group_to_string(const HomologyGroup& g);

// ker A / im B for integer matrices with A B = 0, with enough transform data
// to express arbitrary cycles in the canonical generator basis.
struct QuotientGroup {
  int betti = 0;
  IntVec torsion;                      // diagonal factors > 1
  std::vector<IntVec> free_reps;       // cycle representatives of free generators
  std::vector<IntVec> torsion_reps;

  // internals for coordinates
  IntMatrix qa_inv;
  int rank_a = 0;
  IntMatrix pc;
  IntVec sc_diag;
  int rank_c = 0;
  int ambient = 0;

  struct Coords {
    IntVec free;     // exact integers
    IntVec torsion;  // residues mod the matching invariant factor
    bool is_zero() const;
  };
  // nullopt when v is not in ker A
  std::optional<Coords> coordinates(const IntVec& v) const;
};

QuotientGroup quotient_group(const IntMatrix& a, const IntMatrix& b);

std::vector<HomologyGroup> homology(const ChainComplex& c);

struct CohomologyData {
  std::vector<HomologyGroup> groups;
  std::vector<QuotientGroup> pieces;  // per degree; cochain coordinates
};

CohomologyData cohomology(const ChainComplex& c);

// Chain-level matrix of a simplicial map in one degree (degenerate images -> 0).
IntMatrix chain_map_matrix(const SimplicialMap& m, int degree);

// Matrix of the induced map on the free part of H_degree.
IntMatrix induced_map(const SimplicialMap& m, int degree);

}  // namespace acat
