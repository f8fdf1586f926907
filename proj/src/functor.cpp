#include "acat/functor.hpp"

namespace acat {

const std::string& Functor::obj(const std::string& x) const {
  auto it = object_map.find(x);
  if (it == object_map.end()) throw Error("functor missing object entry for '" + x + "'");
  return it->second;
}

const std::string& Functor::mor(const std::string& f) const {
  auto it = morphism_map.find(f);
  if (it == morphism_map.end()) throw Error("functor missing morphism entry for '" + f + "'");
  return it->second;
}

CheckResult check_functor(const Functor& f) {
  const FiniteCategory& A = *f.source;
  const FiniteCategory& B = *f.target;

  for (const std::string& x : A.objects()) {
    auto it = f.object_map.find(x);
    if (it == f.object_map.end()) return CheckResult::fail("missing object entry for '" + x + "'");
    if (!B.has_object(it->second))
      return CheckResult::fail("object '" + x + "' mapped to unknown '" + it->second + "'");
  }
  for (const Morphism& m : A.morphisms()) {
    auto it = f.morphism_map.find(m.id);
    if (it == f.morphism_map.end())
      return CheckResult::fail("missing morphism entry for '" + m.id + "'");
    int bi = B.morphism_index(it->second);
    if (bi < 0)
      return CheckResult::fail("morphism '" + m.id + "' mapped to unknown '" + it->second + "'");
    const Morphism& img = B.morphism(bi);
    if (img.src != f.obj(m.src) || img.tgt != f.obj(m.tgt))
      return CheckResult::fail("morphism '" + m.id + "' image '" + img.id +
                               "' has wrong endpoints");
  }
  for (const std::string& x : A.objects()) {
    if (f.mor(A.identity_id(x)) != B.identity_id(f.obj(x)))
      return CheckResult::fail("identity of '" + x + "' not sent to an identity");
  }
  const int m = A.morphism_count();
  for (int g = 0; g < m; ++g) {
    for (int h = 0; h < m; ++h) {
      auto gf = A.try_compose(g, h);
      if (!gf) continue;
      int ig = f.mor_index(A.morphism(g).id);
      int ih = f.mor_index(A.morphism(h).id);
      int igf = f.mor_index(A.morphism(*gf).id);
      if (*B.try_compose(ig, ih) != igf)
        return CheckResult::fail("composite mismatch on ('" + A.morphism(g).id + "', '" +
                                 A.morphism(h).id + "'): image of composite is '" +
                                 B.morphism(igf).id + "' but images compose to '" +
                                 B.morphism(*B.try_compose(ig, ih)).id + "'");
    }
  }
  return CheckResult::pass();
}

Functor identity_functor(const CatPtr& c) {
  Functor f;
  f.source = f.target = c;
  for (const std::string& x : c->objects()) f.object_map[x] = x;
  for (const Morphism& m : c->morphisms()) f.morphism_map[m.id] = m.id;
  return f;
}

Functor compose_functors(const Functor& g, const Functor& f) {
  if (!(*f.target == *g.source)) throw Error("functors not composable");
  Functor r;
  r.source = f.source;
  r.target = g.target;
  for (const auto& [x, y] : f.object_map) r.object_map[x] = g.obj(y);
  for (const auto& [m, n] : f.morphism_map) r.morphism_map[m] = g.mor(n);
  return r;
}

bool same_functor(const Functor& a, const Functor& b) {
  return *a.source == *b.source && *a.target == *b.target && a.object_map == b.object_map &&
         a.morphism_map == b.morphism_map;
}

bool injective_on_objects(const Functor& f) {
  std::unordered_map<std::string, int> seen;
  for (const auto& [x, y] : f.object_map) {
    (void)x;
    if (++seen[y] > 1) return false;
  }
  return true;
}

Functor functor_from_generators(const CatPtr& source, const CatPtr& target,
                                const std::unordered_map<std::string, std::string>& object_map,
                                const std::unordered_map<std::string, std::string>& generator_map) {
  Functor f;
  f.source = source;
  f.target = target;
  f.object_map = object_map;
  f.morphism_map = generator_map;
  for (const std::string& x : source->objects())
    f.morphism_map[source->identity_id(x)] = target->identity_id(f.obj(x));

  // close under composition until every morphism has an image
  const int m = source->morphism_count();
  bool progress = true;
  while (progress) {
    progress = false;
    for (int g = 0; g < m; ++g) {
      const std::string& gid = source->morphism(g).id;
      auto git = f.morphism_map.find(gid);
      if (git == f.morphism_map.end()) continue;
      for (int h = 0; h < m; ++h) {
        auto gf = source->try_compose(g, h);
        if (!gf) continue;
        const std::string& hid = source->morphism(h).id;
        auto hit = f.morphism_map.find(hid);
        if (hit == f.morphism_map.end()) continue;
        const std::string& cid = source->morphism(*gf).id;
        int ig = target->morphism_index(git->second);
        int ih = target->morphism_index(hit->second);
        if (ig < 0 || ih < 0) throw Error("generator image not in target category");
        auto img = target->try_compose(ig, ih);
        if (!img) throw Error("generator images not composable for '" + cid + "'");
        const std::string& img_id = target->morphism(*img).id;
        auto cit = f.morphism_map.find(cid);
        if (cit == f.morphism_map.end()) {
          f.morphism_map[cid] = img_id;
          progress = true;
        } else if (cit->second != img_id) {
          throw Error("inconsistent images for composite '" + cid + "': '" + cit->second +
                      "' vs '" + img_id + "'");
        }
      }
    }
  }
  for (const Morphism& mm : source->morphisms()) {
    if (!f.morphism_map.count(mm.id))
      throw Error("generator closure does not reach morphism '" + mm.id + "'");
  }
  return f;
}

const std::string& NaturalTransformation::at(const std::string& x) const {
  auto it = components.find(x);
  if (it == components.end()) throw Error("transformation missing component at '" + x + "'");
  return it->second;
}

CheckResult check_natural(const NaturalTransformation& a) {
  const Functor& F = a.source;
  const Functor& G = a.target;
  if (!(*F.source == *G.source) || !(*F.target == *G.target))
    return CheckResult::fail("functors are not parallel");
  const FiniteCategory& A = *F.source;
  const FiniteCategory& B = *F.target;

  for (const std::string& x : A.objects()) {
    auto it = a.components.find(x);
    if (it == a.components.end()) return CheckResult::fail("missing component at '" + x + "'");
    int ci = B.morphism_index(it->second);
    if (ci < 0) return CheckResult::fail("component at '" + x + "' is not in the codomain");
    const Morphism& c = B.morphism(ci);
    if (c.src != F.obj(x) || c.tgt != G.obj(x))
      return CheckResult::fail("component at '" + x + "' has wrong endpoints");
  }
  for (const Morphism& m : A.morphisms()) {
    int left = B.compose(B.morphism_index(G.mor(m.id)), B.morphism_index(a.at(m.src)));
    int right = B.compose(B.morphism_index(a.at(m.tgt)), B.morphism_index(F.mor(m.id)));
    if (left != right)
      return CheckResult::fail("naturality square fails at '" + m.id + "'");
  }
  return CheckResult::pass();
}

}  // namespace acat
