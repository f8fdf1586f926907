#pragma once

#include <vector>

#include "acat/category.hpp"

namespace acat {

// A monotone map between finite ordinals, stored as the list of image values;
// the codomain is implied by context.
using MonotoneMap = std::vector<int>;

bool is_monotone(const MonotoneMap& m);
bool is_surjection_onto(const MonotoneMap& m, int codomain_points);
MonotoneMap mono_identity(int points);
// g after f: result[i] = g[f[i]]
MonotoneMap mono_compose(const MonotoneMap& g, const MonotoneMap& f);
// the face map [n-1] -> [n] skipping i (n+1 codomain points, n domain points)
MonotoneMap mono_face(int i, int n);

struct EpiMono {
  MonotoneMap epi;            // [k] ->> [r]
  std::vector<int> mono_values;  // strictly increasing image values, size r+1
};
// unique epi-mono factorization m = mono . epi
EpiMono epi_mono_factor(const MonotoneMap& m);

}  // namespace acat
