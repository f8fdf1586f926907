#include "acat/sset.hpp"

#include <algorithm>

namespace acat {

bool is_monotone(const MonotoneMap& m) {
  for (size_t i = 1; i < m.size(); ++i)
    if (m[i] < m[i - 1]) return false;
  return !m.empty();
}

bool is_surjection_onto(const MonotoneMap& m, int codomain_points) {
  if (!is_monotone(m)) return false;
  if (m.front() != 0 || m.back() != codomain_points - 1) return false;
  for (size_t i = 1; i < m.size(); ++i)
    if (m[i] - m[i - 1] > 1) return false;
  return true;
}

MonotoneMap mono_identity(int points) {
  MonotoneMap m(points);
  for (int i = 0; i < points; ++i) m[i] = i;
  return m;
}

MonotoneMap mono_compose(const MonotoneMap& g, const MonotoneMap& f) {
  MonotoneMap r(f.size());
  for (size_t i = 0; i < f.size(); ++i) r[i] = g.at(f[i]);
  return r;
}

MonotoneMap mono_face(int i, int n) {
  MonotoneMap m(n);
  for (int j = 0; j < n; ++j) m[j] = j < i ? j : j + 1;
  return m;
}

EpiMono epi_mono_factor(const MonotoneMap& m) {
  EpiMono r;
  r.mono_values = m;
  std::sort(r.mono_values.begin(), r.mono_values.end());
  r.mono_values.erase(std::unique(r.mono_values.begin(), r.mono_values.end()),
                      r.mono_values.end());
  r.epi.resize(m.size());
  for (size_t i = 0; i < m.size(); ++i) {
    r.epi[i] = static_cast<int>(
        std::lower_bound(r.mono_values.begin(), r.mono_values.end(), m[i]) -
        r.mono_values.begin());
  }
  return r;
}

FormalSimplex nondeg(SimplexRef r) { return {r, mono_identity(r.dim + 1)}; }

int SemiSimplicialSet::count(int dim) const {
  if (dim < 0 || dim > top_dim()) return 0;
  return static_cast<int>(names_[dim].size());
}

int SemiSimplicialSet::total_count() const {
  int n = 0;
  for (int d = 0; d <= top_dim(); ++d) n += count(d);
  return n;
}

int SemiSimplicialSet::index_of(int dim, const std::string& name) const {
  if (dim < 0 || dim > top_dim()) return -1;
  auto it = index_[dim].find(name);
  return it == index_[dim].end() ? -1 : it->second;
}

const FormalSimplex& SemiSimplicialSet::face(int dim, int index, int i) const {
  return faces_.at(dim).at(index).at(i);
}

int SemiSimplicialSet::add_simplex(int dim, const std::string& name,
                                   std::vector<FormalSimplex> faces) {
  if (dim < 0) throw Error("negative dimension");
  if (dim >= 1 && static_cast<int>(faces.size()) != dim + 1)
    throw ValidationError("simplex '" + name + "' needs " + std::to_string(dim + 1) + " faces");
  if (dim == 0 && !faces.empty()) throw ValidationError("vertices have no faces");
  while (top_dim() < dim) {
    names_.emplace_back();
    index_.emplace_back();
    faces_.emplace_back();
  }
  if (index_[dim].count(name))
    throw ValidationError("duplicate simplex name '" + name + "' in dimension " +
                          std::to_string(dim));
  int idx = static_cast<int>(names_[dim].size());
  names_[dim].push_back(name);
  index_[dim][name] = idx;
  faces_[dim].push_back(std::move(faces));
  return idx;
}

FormalSimplex SemiSimplicialSet::face_of(const FormalSimplex& fs, int i) const {
  int n = fs.ambient_dim();
  if (n <= 0) throw Error("vertices have no faces");
  MonotoneMap mu = mono_compose(fs.surj, mono_face(i, n));
  EpiMono em = epi_mono_factor(mu);
  FormalSimplex base = apply_injection(fs.target, em.mono_values);
  return {base.target, mono_compose(base.surj, em.epi)};
}

FormalSimplex SemiSimplicialSet::apply_injection(SimplexRef s,
                                                 const std::vector<int>& kept_values) const {
  FormalSimplex cur = nondeg(s);
  for (int v = s.dim; v >= 0; --v) {
    if (std::binary_search(kept_values.begin(), kept_values.end(), v)) continue;
    if (!cur.degenerate())
      cur = face(cur.target.dim, cur.target.index, v);
    else
      cur = face_of(cur, v);
  }
  return cur;
}

void SemiSimplicialSet::validate() const {
  for (int n = 1; n <= top_dim(); ++n) {
    for (int s = 0; s < count(n); ++s) {
      if (static_cast<int>(faces_[n][s].size()) != n + 1)
        throw ValidationError("face table of '" + names_[n][s] + "' has wrong arity");
      for (int i = 0; i <= n; ++i) {
        const FormalSimplex& f = faces_[n][s][i];
        if (f.ambient_dim() != n - 1)
          throw ValidationError("face of '" + names_[n][s] + "' has wrong ambient dimension");
        if (f.target.dim < 0 || f.target.dim > top_dim() || f.target.index < 0 ||
            f.target.index >= count(f.target.dim))
          throw ValidationError("face of '" + names_[n][s] + "' references a missing simplex");
        if (!is_surjection_onto(f.surj, f.target.dim + 1))
          throw ValidationError("face of '" + names_[n][s] + "' has an invalid collapse map");
      }
    }
  }
  // simplicial identities d_i d_j = d_{j-1} d_i for i < j
  for (int n = 2; n <= top_dim(); ++n) {
    for (int s = 0; s < count(n); ++s) {
      for (int j = 1; j <= n; ++j) {
        for (int i = 0; i < j; ++i) {
          FormalSimplex lhs = face_of(faces_[n][s][j], i);
          FormalSimplex rhs = face_of(faces_[n][s][i], j - 1);
          if (!(lhs == rhs))
            throw ValidationError("simplicial identity d_" + std::to_string(i) + " d_" +
                                  std::to_string(j) + " fails at '" + names_[n][s] + "'");
        }
      }
    }
  }
}

FormalSimplex SimplicialMap::apply_formal(const FormalSimplex& fs) const {
  const FormalSimplex& img = apply(fs.target);
  return {img.target, mono_compose(img.surj, fs.surj)};
}

CheckResult check_simplicial(const SimplicialMap& m) {
  const SemiSimplicialSet& X = *m.source;
  const SemiSimplicialSet& Y = *m.target;
  if (static_cast<int>(m.image.size()) < X.top_dim() + 1)
    return CheckResult::fail("image table misses a dimension");
  for (int n = 0; n <= X.top_dim(); ++n) {
    if (static_cast<int>(m.image[n].size()) != X.count(n))
      return CheckResult::fail("image table has wrong size in dimension " + std::to_string(n));
    for (int s = 0; s < X.count(n); ++s) {
      const FormalSimplex& img = m.image[n][s];
      if (img.ambient_dim() != n)
        return CheckResult::fail("image of '" + X.name({n, s}) + "' has wrong dimension");
      if (img.target.dim > Y.top_dim() || img.target.index >= Y.count(img.target.dim))
        return CheckResult::fail("image of '" + X.name({n, s}) + "' references a missing simplex");
      if (!is_surjection_onto(img.surj, img.target.dim + 1))
        return CheckResult::fail("image of '" + X.name({n, s}) + "' has an invalid collapse map");
      for (int i = 0; n >= 1 && i <= n; ++i) {
        FormalSimplex via_target = Y.face_of(img, i);
        FormalSimplex via_source = m.apply_formal(X.face(n, s, i));
        if (!(via_target == via_source))
          return CheckResult::fail("face compatibility fails at '" + X.name({n, s}) + "', face " +
                                   std::to_string(i));
      }
    }
  }
  return CheckResult::pass();
}

bool is_simplicial_iso(const SimplicialMap& m) {
  const SemiSimplicialSet& X = *m.source;
  const SemiSimplicialSet& Y = *m.target;
  if (X.top_dim() != Y.top_dim()) return false;
  for (int n = 0; n <= X.top_dim(); ++n) {
    if (X.count(n) != Y.count(n)) return false;
    std::vector<char> hit(Y.count(n), 0);
    for (int s = 0; s < X.count(n); ++s) {
      const FormalSimplex& img = m.image[n][s];
      if (img.degenerate()) return false;
      if (hit[img.target.index]) return false;
      hit[img.target.index] = 1;
    }
  }
  return true;
}

SimplicialMap compose_maps(const SimplicialMap& g, const SimplicialMap& f) {
  SimplicialMap r;
  r.source = f.source;
  r.target = g.target;
  r.image.resize(f.image.size());
  for (size_t n = 0; n < f.image.size(); ++n) {
    r.image[n].reserve(f.image[n].size());
    for (const FormalSimplex& fs : f.image[n]) r.image[n].push_back(g.apply_formal(fs));
  }
  return r;
}

SimplicialMap identity_map(const SSetPtr& x) {
  SimplicialMap m;
  m.source = m.target = x;
  m.image.resize(x->top_dim() + 1);
  for (int n = 0; n <= x->top_dim(); ++n)
    for (int s = 0; s < x->count(n); ++s) m.image[n].push_back(nondeg({n, s}));
  return m;
}

SimplicialPushout simplicial_pushout(const SimplicialMap& f, const SimplicialMap& g) {
  const SemiSimplicialSet& A = *f.source;
  const SemiSimplicialSet& X = *f.target;
  const SemiSimplicialSet& B = *g.target;
  if (!(f.source == g.source) && f.source->top_dim() != g.source->top_dim())
    throw Error("simplicial_pushout: legs have different sources");
  CheckResult c;
  if (!(c = check_simplicial(f))) throw Error("simplicial_pushout: left leg: " + c.witness);
  if (!(c = check_simplicial(g))) throw Error("simplicial_pushout: right leg: " + c.witness);

  // f must be dimensionwise injective with nondegenerate images
  std::vector<std::vector<int>> preimage(X.top_dim() + 1);
  for (int n = 0; n <= X.top_dim(); ++n) preimage[n].assign(X.count(n), -1);
  for (int n = 0; n <= A.top_dim(); ++n) {
    for (int s = 0; s < A.count(n); ++s) {
      const FormalSimplex& img = f.image[n][s];
      if (img.degenerate())
        throw Error("simplicial_pushout: leg has degenerate image at '" + A.name({n, s}) + "'");
      if (preimage[n][img.target.index] >= 0)
        throw Error("simplicial_pushout: leg not injective at '" + A.name({n, s}) + "'");
      preimage[n][img.target.index] = s;
    }
  }

  auto y = std::make_shared<SemiSimplicialSet>();
  int top = std::max(X.top_dim(), B.top_dim());
  std::vector<std::vector<int>> b_to_y(top + 1), x_to_y(top + 1);
  SimplicialPushout out;
  out.origin.resize(top + 1);

  // Y-index translation for an X-simplex, possibly rerouted through g
  auto translate_x = [&](int dim, int xi) -> FormalSimplex {
    int a = preimage[dim][xi];
    if (a < 0) return nondeg({dim, x_to_y[dim][xi]});
    const FormalSimplex& gi = g.image[dim][a];
    return {{gi.target.dim, b_to_y[gi.target.dim][gi.target.index]}, gi.surj};
  };

  std::unordered_map<std::string, int> taken;
  for (int n = 0; n <= top; ++n) {
    b_to_y[n].assign(B.count(n), -1);
    x_to_y[n].assign(X.count(n), -1);
    for (int s = 0; s < B.count(n); ++s) {
      std::vector<FormalSimplex> fcs;
      for (int i = 0; n >= 1 && i <= n; ++i) {
        const FormalSimplex& fb = B.face(n, s, i);
        fcs.push_back({{fb.target.dim, b_to_y[fb.target.dim][fb.target.index]}, fb.surj});
      }
      std::string nm = unique_name(B.name({n, s}), taken);
      taken[nm] = 1;
      b_to_y[n][s] = y->add_simplex(n, nm, std::move(fcs));
      out.origin[n].push_back({'B', s});
    }
    for (int s = 0; s < X.count(n); ++s) {
      if (preimage[n][s] >= 0) continue;
      std::vector<FormalSimplex> fcs;
      for (int i = 0; n >= 1 && i <= n; ++i) {
        const FormalSimplex& fx = X.face(n, s, i);
        FormalSimplex t = translate_x(fx.target.dim, fx.target.index);
        fcs.push_back({t.target, mono_compose(t.surj, fx.surj)});
      }
      std::string nm = unique_name(X.name({n, s}), taken);
      taken[nm] = 1;
      x_to_y[n][s] = y->add_simplex(n, nm, std::move(fcs));
      out.origin[n].push_back({'X', s});
    }
  }
  y->validate();

  out.complex = y;
  out.leg_from_b.source = g.target;
  out.leg_from_b.target = y;
  out.leg_from_b.image.resize(B.top_dim() + 1);
  for (int n = 0; n <= B.top_dim(); ++n)
    for (int s = 0; s < B.count(n); ++s)
      out.leg_from_b.image[n].push_back(nondeg({n, b_to_y[n][s]}));
  out.leg_from_x.source = f.target;
  out.leg_from_x.target = y;
  out.leg_from_x.image.resize(X.top_dim() + 1);
  for (int n = 0; n <= X.top_dim(); ++n)
    for (int s = 0; s < X.count(n); ++s)
      out.leg_from_x.image[n].push_back(translate_x(n, s));

  if (!(c = check_simplicial(out.leg_from_b)))
    throw ValidationError("simplicial_pushout leg from B: " + c.witness);
  if (!(c = check_simplicial(out.leg_from_x)))
    throw ValidationError("simplicial_pushout leg from X: " + c.witness);
  return out;
}

}  // namespace acat
