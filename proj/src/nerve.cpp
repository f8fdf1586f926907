#include "acat/nerve.hpp"

#include <algorithm>

namespace acat {

namespace {

std::string chain_name(const FiniteCategory& c, const std::vector<int>& chain) {
  std::string out;
  for (int m : chain) {
    if (!out.empty()) out += "|";
    out += c.morphism(m).id;
  }
  return out;
}

// canonical form of a list of morphisms that may contain identities
FormalSimplex canonical_image(const FiniteCategory& tgt_cat, const NerveResult& tgt,
                              const std::vector<int>& entries, int src_object_if_empty) {
  std::vector<int> stripped;
  MonotoneMap surj(entries.size() + 1);
  surj[0] = 0;
  for (size_t i = 0; i < entries.size(); ++i) {
    if (!tgt_cat.is_identity(entries[i])) stripped.push_back(entries[i]);
    surj[i + 1] = static_cast<int>(stripped.size());
  }
  SimplexRef ref;
  if (stripped.empty()) {
    int obj = src_object_if_empty;
    if (!entries.empty())
      obj = tgt_cat.object_index(tgt_cat.morphism(entries.front()).src);
    ref = tgt.vertex_of_object(obj);
  } else {
    ref = tgt.simplex_of_chain(stripped);
  }
  return {ref, surj};
}

}  // namespace

SimplexRef NerveResult::simplex_of_chain(const std::vector<int>& morphism_indices) const {
  int dim = static_cast<int>(morphism_indices.size());
  std::string nm = chain_name(*category, morphism_indices);
  int idx = complex->index_of(dim, nm);
  if (idx < 0) throw Error("chain '" + nm + "' is not a simplex of the nerve");
  return {dim, idx};
}

NerveResult nerve(const CatPtr& c) {
  if (auto w = acyclicity_witness(*c))
    throw Error("nerve requires an acyclic category: " + *w);

  NerveResult out;
  out.category = c;
  auto complex = std::make_shared<SemiSimplicialSet>();
  const FiniteCategory& C = *c;

  out.chains.emplace_back();
  for (const std::string& o : C.objects()) {
    complex->add_simplex(0, o, {});
    out.chains[0].emplace_back();
  }

  std::vector<int> nonid;
  for (int i = 0; i < C.morphism_count(); ++i)
    if (!C.is_identity(i)) nonid.push_back(i);

  // extend chains dimension by dimension
  std::vector<std::vector<int>> prev;
  for (int m : nonid) prev.push_back({m});
  int dim = 1;
  while (!prev.empty()) {
    out.chains.push_back(prev);
    for (const std::vector<int>& chain : prev) {
      std::vector<FormalSimplex> faces;
      for (int i = 0; i <= dim; ++i) {
        if (dim == 1) {
          const Morphism& m = C.morphism(chain[0]);
          int obj = C.object_index(i == 0 ? m.tgt : m.src);
          faces.push_back(nondeg({0, obj}));
        } else if (i == 0) {
          std::vector<int> sub(chain.begin() + 1, chain.end());
          faces.push_back(nondeg({dim - 1, complex->index_of(dim - 1, chain_name(C, sub))}));
        } else if (i == dim) {
          std::vector<int> sub(chain.begin(), chain.end() - 1);
          faces.push_back(nondeg({dim - 1, complex->index_of(dim - 1, chain_name(C, sub))}));
        } else {
          std::vector<int> sub(chain.begin(), chain.begin() + (i - 1));
          sub.push_back(C.compose(chain[i], chain[i - 1]));
          sub.insert(sub.end(), chain.begin() + (i + 1), chain.end());
          faces.push_back(nondeg({dim - 1, complex->index_of(dim - 1, chain_name(C, sub))}));
        }
      }
      complex->add_simplex(dim, chain_name(C, chain), std::move(faces));
    }
    std::vector<std::vector<int>> next;
    for (const std::vector<int>& chain : prev) {
      const std::string& end = C.morphism(chain.back()).tgt;
      for (int m : nonid) {
        if (C.morphism(m).src != end) continue;
        std::vector<int> ext = chain;
        ext.push_back(m);
        next.push_back(std::move(ext));
      }
    }
    prev = std::move(next);
    ++dim;
    if (dim > C.object_count() + 1)
      throw Error("nerve dimension exceeds the object count; category not acyclic?");
  }

  complex->validate();
  out.complex = complex;
  return out;
}

SimplicialMap nerve_map(const Functor& f, const NerveResult& src, const NerveResult& tgt) {
  if (!(*f.source == *src.category) || !(*f.target == *tgt.category))
    throw Error("nerve_map: functor does not match the nerves");
  const FiniteCategory& A = *src.category;
  const FiniteCategory& B = *tgt.category;

  SimplicialMap m;
  m.source = src.complex;
  m.target = tgt.complex;
  m.image.resize(src.complex->top_dim() + 1);
  for (int i = 0; i < A.object_count(); ++i)
    m.image[0].push_back(nondeg(tgt.vertex_of_object(B.object_index(f.obj(A.objects()[i])))));
  for (int n = 1; n <= src.complex->top_dim(); ++n) {
    for (const std::vector<int>& chain : src.chains[n]) {
      std::vector<int> entries;
      for (int mi : chain) entries.push_back(f.mor_index(A.morphism(mi).id));
      int src_obj = B.object_index(f.obj(A.morphism(chain[0]).src));
      m.image[n].push_back(canonical_image(B, tgt, entries, src_obj));
    }
  }
  CheckResult c = check_simplicial(m);
  if (!c) throw ValidationError("nerve_map: " + c.witness);
  return m;
}

SimplicialCylinder simplicial_mapping_cylinder(const Functor& f) {
  SimplicialCylinder out;
  out.product = product_with_arrow(f.source);
  out.nerve_source = nerve(f.source);
  out.nerve_product = nerve(out.product.product);
  out.nerve_target = nerve(f.target);
  SimplicialMap top = nerve_map(out.product.include_top, out.nerve_source, out.nerve_product);
  SimplicialMap across = nerve_map(f, out.nerve_source, out.nerve_target);
  out.pushout = simplicial_pushout(top, across);
  return out;
}

ComparisonResult comparison_k(const Functor& f) {
  ComparisonResult out;
  out.cylinder = mapping_cylinder(f);
  out.nerve_cylinder = nerve(out.cylinder.cylinder);
  out.simplicial = simplicial_mapping_cylinder(f);

  const FiniteCategory& A = *f.source;
  const FiniteCategory& B = *f.target;
  const FiniteCategory& M = *out.cylinder.cylinder;
  const NerveResult& NM = out.nerve_cylinder;
  const SemiSimplicialSet& Y = *out.simplicial.pushout.complex;
  const NerveResult& NX = out.simplicial.nerve_product;  // N(A x 2)
  const NerveResult& NB = out.simplicial.nerve_target;

  SimplicialMap k;
  k.source = out.simplicial.pushout.complex;
  k.target = NM.complex;
  k.image.resize(Y.top_dim() + 1);

  for (int n = 0; n <= Y.top_dim(); ++n) {
    for (size_t yi = 0; yi < out.simplicial.pushout.origin[n].size(); ++yi) {
      auto [side, si] = out.simplicial.pushout.origin[n][yi];
      if (side == 'B') {
        // chains of B embed through the target inclusion
        if (n == 0) {
          const std::string& obj = B.objects()[si];
          int v = M.object_index(out.cylinder.include_target.obj(obj));
          k.image[0].push_back(nondeg(NM.vertex_of_object(v)));
        } else {
          std::vector<int> entries;
          for (int mi : NB.chains[n][si])
            entries.push_back(M.morphism_index(out.cylinder.include_target.mor(B.morphism(mi).id)));
          k.image[n].push_back(nondeg(NM.simplex_of_chain(entries)));
        }
      } else {
        // chains of A x 2: levels split into a source part, one step, a target part
        if (n == 0) {
          const auto& [obj, lvl] = out.simplicial.product.decode_object.at(
              out.simplicial.nerve_product.category->objects()[si]);
          int v = lvl == 0 ? M.object_index(obj)
                           : M.object_index(out.cylinder.include_target.obj(f.obj(obj)));
          k.image[0].push_back(nondeg(NM.vertex_of_object(v)));
        } else {
          std::vector<int> entries;
          for (int mi : NX.chains[n][si]) {
            const std::string& pid = NX.category->morphism(mi).id;
            const auto& [aid, lvl] = out.simplicial.product.decode_morphism.at(pid);
            if (lvl == ProductWithArrow::kBottom) {
              entries.push_back(M.morphism_index(out.cylinder.include_source.mor(aid)));
            } else if (lvl == ProductWithArrow::kStep) {
              const Morphism& u = A.morphism(A.morphism_index(aid));
              entries.push_back(
                  M.morphism_index(out.cylinder.cross_id(u.src, f.mor(aid))));
            } else {
              entries.push_back(M.morphism_index(out.cylinder.include_target.mor(f.mor(aid))));
            }
          }
          int src_obj = -1;  // never needed: the step entry is never an identity
          {
            const std::string& pid = NX.category->morphism(NX.chains[n][si][0]).id;
            const auto& [aid, lvl] = out.simplicial.product.decode_morphism.at(pid);
            const Morphism& u = A.morphism(A.morphism_index(aid));
            src_obj = lvl == ProductWithArrow::kTop
                          ? M.object_index(out.cylinder.include_target.obj(f.obj(u.src)))
                          : M.object_index(u.src);
          }
          k.image[n].push_back(canonical_image(M, NM, entries, src_obj));
        }
      }
    }
  }
  CheckResult c = check_simplicial(k);
  if (!c) throw ValidationError("comparison map: " + c.witness);
  out.k = k;

  // nondegenerate simplices of N(M_F) not hit by k
  out.missed.resize(NM.complex->top_dim() + 1);
  for (int n = 0; n <= NM.complex->top_dim(); ++n) {
    std::vector<char> hit(NM.complex->count(n), 0);
    if (n < static_cast<int>(k.image.size()))
      for (const FormalSimplex& fs : k.image[n])
        if (!fs.degenerate()) hit[fs.target.index] = 1;
    for (int s = 0; s < NM.complex->count(n); ++s)
      if (!hit[s]) out.missed[n].push_back(NM.complex->name({n, s}));
  }
  return out;
}

bool ComparisonResult::surjective() const {
  for (const auto& v : missed)
    if (!v.empty()) return false;
  return true;
}

std::optional<std::pair<std::string, std::string>> cylinder_condition_failure(const Functor& f) {
  const FiniteCategory& A = *f.source;
  const FiniteCategory& B = *f.target;
  for (const std::string& x : A.objects()) {
    const std::string& fx = f.obj(x);
    for (const Morphism& g : B.morphisms()) {
      if (g.src != fx) continue;
      bool witnessed = false;
      for (const Morphism& u : A.morphisms()) {
        if (u.src != x) continue;
        if (f.mor(u.id) == g.id) {
          witnessed = true;
          break;
        }
      }
      if (!witnessed) return std::make_pair(x, g.id);
    }
  }
  return std::nullopt;
}

bool cylinder_condition(const Functor& f) { return !cylinder_condition_failure(f); }

PushoutComparison pushout_comparison(const PushoutResult& po) {
  PushoutComparison out;
  NerveResult na = nerve(po.span_left.source);
  NerveResult nb = nerve(po.span_left.target);
  NerveResult nc = nerve(po.span_right.target);
  out.nerve_apex = nerve(po.apex);

  SimplicialMap f = nerve_map(po.span_left, na, nb);
  SimplicialMap g = nerve_map(po.span_right, na, nc);
  out.simplicial = simplicial_pushout(f, g);

  SimplicialMap from_b = nerve_map(po.leg_left, nb, out.nerve_apex);
  SimplicialMap from_c = nerve_map(po.leg_right, nc, out.nerve_apex);

  const SemiSimplicialSet& Y = *out.simplicial.complex;
  SimplicialMap med;
  med.source = out.simplicial.complex;
  med.target = out.nerve_apex.complex;
  med.image.resize(Y.top_dim() + 1);
  for (int n = 0; n <= Y.top_dim(); ++n) {
    for (size_t yi = 0; yi < out.simplicial.origin[n].size(); ++yi) {
      auto [side, si] = out.simplicial.origin[n][yi];
      med.image[n].push_back(side == 'X' ? from_b.image[n][si] : from_c.image[n][si]);
    }
  }
  CheckResult c = check_simplicial(med);
  if (!c) throw ValidationError("pushout comparison map: " + c.witness);
  out.mediating = med;
  return out;
}

}  // namespace acat
