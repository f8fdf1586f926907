#include "acat/cup.hpp"

namespace acat {

namespace {

std::vector<int> range(int from, int to) {
  std::vector<int> r;
  for (int i = from; i <= to; ++i) r.push_back(i);
  return r;
}

}  // namespace

IntVec cup_cochain(const SemiSimplicialSet& x, int p, const IntVec& a, int q, const IntVec& b) {
  int n = p + q;
  IntVec out(n <= x.top_dim() ? x.count(n) : 0);
  for (int s = 0; s < static_cast<int>(out.size()); ++s) {
    FormalSimplex front = x.apply_injection({n, s}, range(0, p));
    if (front.degenerate()) continue;
    FormalSimplex back = x.apply_injection({n, s}, range(p, n));
    if (back.degenerate()) continue;
    out[s] = a.at(front.target.index) * b.at(back.target.index);
  }
  return out;
}

bool is_cocycle(const ChainComplex& c, int degree, const IntVec& v) {
  if (degree >= c.top()) return true;  // no higher simplices to test against
  IntMatrix delta = c.boundary[degree + 1].transposed();
  for (const Int& e : delta.apply(v))
    if (e != 0) return false;
  return true;
}

CohomologyClass cup_product(const SemiSimplicialSet& x, const ChainComplex& c,
                            const CohomologyClass& a, const CohomologyClass& b) {
  if (a.degree > x.top_dim() || static_cast<int>(a.cochain.size()) != x.count(a.degree))
    throw Error("cup_product: left class does not live on this complex");
  if (b.degree > x.top_dim() || static_cast<int>(b.cochain.size()) != x.count(b.degree))
    throw Error("cup_product: right class does not live on this complex");
  if (!is_cocycle(c, a.degree, a.cochain) || !is_cocycle(c, b.degree, b.cochain))
    throw Error("cup_product: operand is not a cocycle");
  CohomologyClass out;
  out.degree = a.degree + b.degree;
  out.cochain = cup_cochain(x, a.degree, a.cochain, b.degree, b.cochain);
  if (out.degree <= x.top_dim() && !is_cocycle(c, out.degree, out.cochain))
    throw Error("cup_product: product is not a cocycle");
  return out;
}

long long hopf_invariant(const SemiSimplicialSet& x) {
  ChainComplex c = chain_complex(x);
  CohomologyData coh = cohomology(c);
  auto require_z = [&](int degree) -> const QuotientGroup& {
    if (degree >= static_cast<int>(coh.pieces.size()))
      throw HypothesisError("H^" + std::to_string(degree) + " is trivial, expected Z");
    const QuotientGroup& q = coh.pieces[degree];
    if (q.betti != 1 || !q.torsion.empty())
      throw HypothesisError("H^" + std::to_string(degree) + " is " +
                            group_to_string(coh.groups[degree]) + ", expected Z");
    return q;
  };
  const QuotientGroup& h2 = require_z(2);
  const QuotientGroup& h4 = require_z(4);
  IntVec square = cup_cochain(x, 2, h2.free_reps[0], 2, h2.free_reps[0]);
  auto coords = h4.coordinates(square);
  if (!coords) throw Error("hopf_invariant: cup square is not a cocycle");
  return coords->free[0].convert_to<long long>();
}

CupReport cup_report(const SemiSimplicialSet& x) {
  CupReport out;
  ChainComplex c = chain_complex(x);
  CohomologyData coh = cohomology(c);
  out.groups = coh.groups;
  for (int p = 1; p <= c.top(); ++p) {
    for (int q = 1; p + q <= c.top(); ++q) {
      const QuotientGroup& gp = coh.pieces[p];
      const QuotientGroup& gq = coh.pieces[q];
      const QuotientGroup& gpq = coh.pieces[p + q];
      if (gpq.betti == 0 && gpq.torsion.empty()) continue;
      for (int i = 0; i < gp.betti; ++i) {
        for (int j = 0; j < gq.betti; ++j) {
          IntVec prod = cup_cochain(x, p, gp.free_reps[i], q, gq.free_reps[j]);
          auto coords = gpq.coordinates(prod);
          if (!coords) throw Error("cup_report: product is not a cocycle");
          CupPairing pairing;
          pairing.p = p;
          pairing.q = q;
          pairing.left = i;
          pairing.right = j;
          pairing.coords = coords->free;
          for (const Int& t : coords->torsion) pairing.coords.push_back(t);
          out.pairings.push_back(std::move(pairing));
        }
      }
    }
  }
  bool h2_ok = c.top() >= 4 && coh.groups.size() > 4 && coh.groups[2].betti == 1 &&
               coh.groups[2].torsion.empty() && coh.groups[4].betti == 1 &&
               coh.groups[4].torsion.empty();
  if (h2_ok) out.hopf = hopf_invariant(x);
  return out;
}

}  // namespace acat
