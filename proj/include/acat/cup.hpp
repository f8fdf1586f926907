#pragma once

#include "acat/homology.hpp"

namespace acat {

struct CohomologyClass {
  int degree = 0;
  IntVec cochain;  // values on nondegenerate simplices of its degree
};

struct HypothesisError : Error {
  using Error::Error;
};

// Alexander-Whitney product of normalized cochains: evaluate a on the front
// p-face and b on the back q-face; degenerate faces contribute zero.
IntVec cup_cochain(const SemiSimplicialSet& x, int p, const IntVec& a, int q, const IntVec& b);

// Checked variant on classes; degrees beyond the top dimension give the zero
// class in degree p+q.
CohomologyClass cup_product(const SemiSimplicialSet& x, const ChainComplex& c,
                            const CohomologyClass& a, const CohomologyClass& b);

bool is_cocycle(const ChainComplex& c, int degree, const IntVec& v);

// Cup-square coefficient of the degree-2 generator inside the degree-4
// generator.  Requires H^2 and H^4 free of rank one; throws HypothesisError
// naming the failing group otherwise.  The sign is basis-dependent.
long long hopf_invariant(const SemiSimplicialSet& x);

struct CupPairing {
  int p = 0, q = 0;
  int left = 0, right = 0;      // generator indices in degrees p and q
  IntVec coords;                // class of the product in the degree-(p+q) basis
};

struct CupReport {
  std::vector<HomologyGroup> groups;
  std::vector<CupPairing> pairings;
  std::optional<long long> hopf;  // set when H^2 and H^4 are both Z
};

CupReport cup_report(const SemiSimplicialSet& x);

}  // namespace acat
