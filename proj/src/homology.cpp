#include "acat/homology.hpp"

namespace acat {

void ChainComplex::validate() const {
  for (int n = 1; n <= top(); ++n) {
    if (boundary[n].rows() != counts[n - 1] || boundary[n].cols() != counts[n])
      throw ValidationError("boundary matrix shape mismatch in degree " + std::to_string(n));
  }
  for (int n = 2; n <= top(); ++n) {
    if (!(boundary[n - 1] * boundary[n]).is_zero())
      throw ValidationError("boundary of boundary is nonzero in degree " + std::to_string(n));
  }
}

ChainComplex chain_complex(const SemiSimplicialSet& x) {
  ChainComplex c;
  if (x.top_dim() < 0) return c;
  for (int n = 0; n <= x.top_dim(); ++n) c.counts.push_back(x.count(n));
  c.boundary.resize(x.top_dim() + 1);
  c.boundary[0] = IntMatrix(0, x.count(0));
  for (int n = 1; n <= x.top_dim(); ++n) {
    IntMatrix d(x.count(n - 1), x.count(n));
    for (int s = 0; s < x.count(n); ++s) {
      for (int i = 0; i <= n; ++i) {
        const FormalSimplex& f = x.face(n, s, i);
        if (f.degenerate()) continue;
        d.at(f.target.index, s) += (i % 2 == 0) ? 1 : -1;
      }
    }
    c.boundary[n] = std::move(d);
  }
  c.validate();
  return c;
}

long long euler_characteristic(const SemiSimplicialSet& x) {
  long long chi = 0;
  for (int n = 0; n <= x.top_dim(); ++n) chi += (n % 2 == 0) ? x.count(n) : -x.count(n);
  return chi;
}

std::string group_to_string(const HomologyGroup& g) {
  std::string out;
  if (g.betti == 1)
    out = "Z";
  else if (g.betti > 1)
    out = "Z^" + std::to_string(g.betti);
  for (long long t : g.torsion) {
    if (!out.empty()) out += " + ";
    out += "Z/" + std::to_string(t);
  }
  return out.empty() ? "0" : out;
}

bool QuotientGroup::Coords::is_zero() const {
  for (const Int& v : free)
    if (v != 0) return false;
  for (const Int& v : torsion)
    if (v != 0) return false;
  return true;
}

std::optional<QuotientGroup::Coords> QuotientGroup::coordinates(const IntVec& v) const {
  if (static_cast<int>(v.size()) != ambient) throw Error("coordinate vector has wrong length");
  IntVec w = qa_inv.apply(v);
  for (int i = 0; i < rank_a; ++i)
    if (w[i] != 0) return std::nullopt;
  IntVec c0(w.begin() + rank_a, w.end());
  IntVec c = pc.apply(c0);
  Coords out;
  for (size_t i = rank_c; i < c.size(); ++i) out.free.push_back(c[i]);
  for (int i = 0; i < rank_c; ++i) {
    if (sc_diag[i] > 1) {
      Int r = c[i] % sc_diag[i];
      if (r < 0) r += sc_diag[i];
      out.torsion.push_back(r);
    }
  }
  return out;
}

QuotientGroup quotient_group(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw Error("quotient_group: shape mismatch");
  if (!(a * b).is_zero()) throw Error("quotient_group: A B != 0");

  QuotientGroup out;
  out.ambient = a.cols();
  SmithNormalForm sa = smith_normal_form(a);
  out.rank_a = sa.rank;
  out.qa_inv = sa.Qinv;
  const int k = a.cols() - sa.rank;  // kernel rank
  IntMatrix kernel = sa.Q.columns(sa.rank, a.cols());

  // express the image of B in kernel coordinates
  IntMatrix qb = sa.Qinv * b;
  IntMatrix c(k, b.cols());
  for (int i = 0; i < sa.rank; ++i)
    for (int j = 0; j < b.cols(); ++j)
      if (qb.at(i, j) != 0) throw Error("quotient_group: image not inside the kernel");
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < b.cols(); ++j) c.at(i, j) = qb.at(sa.rank + i, j);

  SmithNormalForm sc = smith_normal_form(c);
  out.rank_c = sc.rank;
  out.pc = sc.P;
  for (const Int& f : sc.factors) out.sc_diag.push_back(f);
  out.betti = k - sc.rank;

  IntMatrix adapted = kernel * sc.Pinv;  // columns adapted to the image lattice
  for (int j = sc.rank; j < k; ++j) out.free_reps.push_back(adapted.column(j));
  for (int j = 0; j < sc.rank; ++j)
    if (sc.factors[j] > 1) {
      out.torsion.push_back(sc.factors[j]);
      out.torsion_reps.push_back(adapted.column(j));
    }
  return out;
}

namespace {

IntMatrix boundary_or_zero(const ChainComplex& c, int n) {
  if (n >= 1 && n <= c.top()) return c.boundary[n];
  if (n == 0) return IntMatrix(0, c.counts.empty() ? 0 : c.counts[0]);
  // past the top: zero map from a rank-0 group
  return IntMatrix(n - 1 <= c.top() && n - 1 >= 0 ? c.counts[n - 1] : 0, 0);
}

HomologyGroup to_group(int degree, const QuotientGroup& q) {
  HomologyGroup g;
  g.degree = degree;
  g.betti = q.betti;
  for (const Int& t : q.torsion) g.torsion.push_back(t.convert_to<long long>());
  return g;
}

}  // namespace

std::vector<HomologyGroup> homology(const ChainComplex& c) {
  std::vector<HomologyGroup> out;
  for (int n = 0; n <= c.top(); ++n) {
    QuotientGroup q = quotient_group(boundary_or_zero(c, n), boundary_or_zero(c, n + 1));
    out.push_back(to_group(n, q));
  }
  return out;
}

CohomologyData cohomology(const ChainComplex& c) {
  CohomologyData out;
  for (int n = 0; n <= c.top(); ++n) {
    IntMatrix delta_up = boundary_or_zero(c, n + 1).transposed();   // C^n -> C^{n+1}
    IntMatrix delta_down = boundary_or_zero(c, n).transposed();     // C^{n-1} -> C^n
    QuotientGroup q = quotient_group(delta_up, delta_down);
    out.groups.push_back(to_group(n, q));
    out.pieces.push_back(std::move(q));
  }
  return out;
}

IntMatrix chain_map_matrix(const SimplicialMap& m, int degree) {
  int src_count = degree <= m.source->top_dim() ? m.source->count(degree) : 0;
  int tgt_count = degree <= m.target->top_dim() ? m.target->count(degree) : 0;
  IntMatrix t(tgt_count, src_count);
  for (int s = 0; s < src_count; ++s) {
    const FormalSimplex& img = m.image[degree][s];
    if (img.degenerate()) continue;
    t.at(img.target.index, s) += 1;
  }
  return t;
}

IntMatrix induced_map(const SimplicialMap& m, int degree) {
  ChainComplex cs = chain_complex(*m.source);
  ChainComplex ct = chain_complex(*m.target);
  QuotientGroup hs = quotient_group(boundary_or_zero(cs, degree), boundary_or_zero(cs, degree + 1));
  QuotientGroup ht = quotient_group(boundary_or_zero(ct, degree), boundary_or_zero(ct, degree + 1));
  IntMatrix f = chain_map_matrix(m, degree);
  IntMatrix out(ht.betti, hs.betti);
  for (int j = 0; j < hs.betti; ++j) {
    IntVec img = f.apply(hs.free_reps[j]);
    auto coords = ht.coordinates(img);
    if (!coords) throw Error("induced_map: image of a cycle is not a cycle");
    for (int i = 0; i < ht.betti; ++i) out.at(i, j) = coords->free[i];
  }
  return out;
}

}  // namespace acat
