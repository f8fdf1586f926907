#include "acat/off_io.hpp"

#include <cmath>
#include <cstdint>
#include <sstream>

namespace acat {

namespace {

uint64_t fnv1a(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

std::string export_off(const SemiSimplicialSet& x) {
  const int nv = x.count(0);
  const int ne = x.count(1);
  const int nf = x.count(2);
  std::ostringstream out;
  out << "OFF\n" << nv << " " << nf << " " << ne << "\n";
  out.setf(std::ios::fixed);
  out.precision(6);
  for (int v = 0; v < nv; ++v) {
    uint64_t h = fnv1a(x.name({0, v}));
    double theta = 3.14159265358979323846 * double(h % 360001) / 360001.0;
    double phi = 2.0 * 3.14159265358979323846 * double((h >> 20) % 360007) / 360007.0;
    out << std::sin(theta) * std::cos(phi) << " " << std::sin(theta) * std::sin(phi) << " "
        << std::cos(theta) << "\n";
  }
  for (int f = 0; f < nf; ++f) {
    out << "3";
    for (int v = 0; v <= 2; ++v) {
      FormalSimplex vert = x.apply_injection({2, f}, {v});
      out << " " << vert.target.index;
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace acat
