#include "acat/category.hpp"

#include <algorithm>
#include <set>

namespace acat {

FiniteCategory::FiniteCategory(std::vector<std::string> objects, std::vector<Morphism> morphisms,
                               std::vector<int> identity_by_object, std::vector<int> compose_table)
    : objects_(std::move(objects)),
      morphisms_(std::move(morphisms)),
      identity_(std::move(identity_by_object)),
      compose_(std::move(compose_table)) {
  rebuild_indices();
}

void FiniteCategory::rebuild_indices() {
  obj_index_.clear();
  mor_index_.clear();
  for (int i = 0; i < object_count(); ++i) {
    if (!obj_index_.emplace(objects_[i], i).second)
      throw ValidationError("duplicate object name '" + objects_[i] + "'");
  }
  for (int i = 0; i < morphism_count(); ++i) {
    if (!mor_index_.emplace(morphisms_[i].id, i).second)
      throw ValidationError("duplicate morphism id '" + morphisms_[i].id + "'");
  }
}

int FiniteCategory::object_index(const std::string& name) const {
  auto it = obj_index_.find(name);
  return it == obj_index_.end() ? -1 : it->second;
}

int FiniteCategory::morphism_index(const std::string& id) const {
  auto it = mor_index_.find(id);
  return it == mor_index_.end() ? -1 : it->second;
}

const std::string& FiniteCategory::identity_id(const std::string& obj) const {
  int o = object_index(obj);
  if (o < 0) throw Error("unknown object '" + obj + "'");
  return morphisms_[identity_[o]].id;
}

bool FiniteCategory::is_identity(int mor) const {
  const Morphism& m = morphisms_.at(mor);
  if (m.src != m.tgt) return false;
  return identity_[object_index(m.src)] == mor;
}

std::optional<int> FiniteCategory::try_compose(int g, int f) const {
  int r = compose_.at(static_cast<size_t>(g) * morphism_count() + f);
  if (r < 0) return std::nullopt;
  return r;
}

int FiniteCategory::compose(int g, int f) const {
  auto r = try_compose(g, f);
  if (!r)
    throw Error("morphisms not composable: '" + morphisms_[g].id + "' after '" +
                morphisms_[f].id + "'");
  return *r;
}

const std::string& FiniteCategory::compose_ids(const std::string& g, const std::string& f) const {
  int gi = morphism_index(g), fi = morphism_index(f);
  if (gi < 0 || fi < 0) throw Error("unknown morphism in composition: " + g + ", " + f);
  return morphisms_[compose(gi, fi)].id;
}

std::vector<int> FiniteCategory::hom(int src, int tgt) const {
  std::vector<int> out;
  for (int i = 0; i < morphism_count(); ++i)
    if (object_index(morphisms_[i].src) == src && object_index(morphisms_[i].tgt) == tgt)
      out.push_back(i);
  return out;
}

std::vector<int> FiniteCategory::hom(const std::string& src, const std::string& tgt) const {
  return hom(object_index(src), object_index(tgt));
}

void FiniteCategory::validate() const {
  const int m = morphism_count();
  if (static_cast<int>(identity_.size()) != object_count())
    throw ValidationError("identity table size mismatch");
  if (compose_.size() != static_cast<size_t>(m) * m)
    throw ValidationError("composition table size mismatch");

  for (const Morphism& mor : morphisms_) {
    if (object_index(mor.src) < 0 || object_index(mor.tgt) < 0)
      throw ValidationError("morphism '" + mor.id + "' has undeclared endpoint");
  }
  for (int o = 0; o < object_count(); ++o) {
    int id = identity_[o];
    if (id < 0 || id >= m) throw ValidationError("identity index out of range");
    if (morphisms_[id].src != objects_[o] || morphisms_[id].tgt != objects_[o])
      throw ValidationError("identity of '" + objects_[o] + "' has wrong endpoints");
  }

  // compose defined exactly on composable pairs, with correct endpoints
  for (int g = 0; g < m; ++g) {
    for (int f = 0; f < m; ++f) {
      int r = compose_[static_cast<size_t>(g) * m + f];
      bool composable = morphisms_[f].tgt == morphisms_[g].src;
      if (composable && r < 0)
        throw ValidationError("composition missing for '" + morphisms_[g].id + "' after '" +
                              morphisms_[f].id + "'");
      if (!composable && r >= 0)
        throw ValidationError("composition defined on non-composable pair ('" +
                              morphisms_[g].id + "', '" + morphisms_[f].id + "')");
      if (r >= 0) {
        if (morphisms_[r].src != morphisms_[f].src || morphisms_[r].tgt != morphisms_[g].tgt)
          throw ValidationError("composite '" + morphisms_[r].id + "' of ('" + morphisms_[g].id +
                                "', '" + morphisms_[f].id + "') has wrong endpoints");
      }
    }
  }

  // unit laws
  for (int f = 0; f < m; ++f) {
    int ids = identity_[object_index(morphisms_[f].src)];
    int idt = identity_[object_index(morphisms_[f].tgt)];
    if (compose_[static_cast<size_t>(f) * m + ids] != f)
      throw ValidationError("unit law fails: '" + morphisms_[f].id + "' after identity");
    if (compose_[static_cast<size_t>(idt) * m + f] != f)
      throw ValidationError("unit law fails: identity after '" + morphisms_[f].id + "'");
  }

  // associativity on every composable triple
  for (int f = 0; f < m; ++f) {
    for (int g = 0; g < m; ++g) {
      if (morphisms_[f].tgt != morphisms_[g].src) continue;
      int gf = compose_[static_cast<size_t>(g) * m + f];
      for (int h = 0; h < m; ++h) {
        if (morphisms_[g].tgt != morphisms_[h].src) continue;
        int hg = compose_[static_cast<size_t>(h) * m + g];
        if (compose_[static_cast<size_t>(h) * m + gf] != compose_[static_cast<size_t>(hg) * m + f])
          throw ValidationError("associativity fails on ('" + morphisms_[h].id + "', '" +
                                morphisms_[g].id + "', '" + morphisms_[f].id + "')");
      }
    }
  }
}

bool FiniteCategory::operator==(const FiniteCategory& other) const {
  return objects_ == other.objects_ && morphisms_ == other.morphisms_ &&
         identity_ == other.identity_ && compose_ == other.compose_;
}

void CategoryBuilder::add_object(const std::string& name) {
  if (!objects_set_.emplace(name, static_cast<int>(objects_.size())).second)
    throw ValidationError("duplicate object '" + name + "'");
  objects_.push_back(name);
}

void CategoryBuilder::add_morphism(const std::string& id, const std::string& src,
                                   const std::string& tgt) {
  if (id.rfind("id:", 0) == 0)
    throw ValidationError("morphism id '" + id + "' uses the reserved identity prefix");
  if (!morphisms_set_.emplace(id, static_cast<int>(morphisms_.size())).second)
    throw ValidationError("duplicate morphism id '" + id + "'");
  morphisms_.push_back({id, src, tgt});
}

void CategoryBuilder::set_compose(const std::string& g, const std::string& f,
                                  const std::string& gf) {
  compositions_.push_back({g, f, gf});
}

FiniteCategory CategoryBuilder::build() const {
  std::vector<std::string> objects = objects_;
  std::vector<Morphism> morphisms;
  std::vector<int> identity(objects.size(), -1);
  for (size_t o = 0; o < objects.size(); ++o) {
    identity[o] = static_cast<int>(morphisms.size());
    morphisms.push_back({identity_name(objects[o]), objects[o], objects[o]});
  }
  for (const Morphism& m : morphisms_) morphisms.push_back(m);

  std::unordered_map<std::string, int> midx;
  for (size_t i = 0; i < morphisms.size(); ++i) midx[morphisms[i].id] = static_cast<int>(i);
  std::unordered_map<std::string, int> oidx;
  for (size_t i = 0; i < objects.size(); ++i) oidx[objects[i]] = static_cast<int>(i);

  const int m = static_cast<int>(morphisms.size());
  std::vector<int> table(static_cast<size_t>(m) * m, -1);

  auto lookup = [&](const std::string& id) {
    auto it = midx.find(id);
    if (it == midx.end()) {
      // allow naming identities by their object via "id:obj"
      throw ValidationError("composition references unknown morphism '" + id + "'");
    }
    return it->second;
  };

  // unit laws
  for (int f = 0; f < m; ++f) {
    auto sit = oidx.find(morphisms[f].src);
    auto tit = oidx.find(morphisms[f].tgt);
    if (sit == oidx.end() || tit == oidx.end())
      throw ValidationError("morphism '" + morphisms[f].id + "' has undeclared endpoint");
    table[static_cast<size_t>(f) * m + identity[sit->second]] = f;
    table[static_cast<size_t>(identity[tit->second]) * m + f] = f;
  }
  for (const auto& [g, f, gf] : compositions_) {
    int gi = lookup(g), fi = lookup(f), ri = lookup(gf);
    int& slot = table[static_cast<size_t>(gi) * m + fi];
    if (slot >= 0 && slot != ri)
      throw ValidationError("conflicting composition for ('" + g + "', '" + f + "')");
    slot = ri;
  }

  FiniteCategory cat(std::move(objects), std::move(morphisms), std::move(identity),
                     std::move(table));
  cat.validate();
  return cat;
}

bool is_skeletal(const FiniteCategory& c) {
  // an isomorphism between distinct objects is the only way to fail
  const int m = c.morphism_count();
  for (int f = 0; f < m; ++f) {
    const Morphism& mf = c.morphism(f);
    if (mf.src == mf.tgt) continue;
    for (int g : c.hom(mf.tgt, mf.src)) {
      int sf = c.object_index(mf.src), tf = c.object_index(mf.tgt);
      if (*c.try_compose(g, f) == c.identity_of(sf) && *c.try_compose(f, g) == c.identity_of(tf))
        return false;
    }
  }
  return true;
}

bool is_progressive(const FiniteCategory& c) {
  for (int i = 0; i < c.morphism_count(); ++i) {
    const Morphism& m = c.morphism(i);
    if (m.src == m.tgt && !c.is_identity(i)) return false;
  }
  return true;
}

bool is_acyclic(const FiniteCategory& c) { return is_skeletal(c) && is_progressive(c); }

std::optional<std::string> acyclicity_witness(const FiniteCategory& c) {
  for (int i = 0; i < c.morphism_count(); ++i) {
    const Morphism& m = c.morphism(i);
    if (m.src == m.tgt && !c.is_identity(i))
      return "non-identity endomorphism '" + m.id + "' at object '" + m.src + "'";
  }
  const int mcount = c.morphism_count();
  for (int f = 0; f < mcount; ++f) {
    const Morphism& mf = c.morphism(f);
    if (mf.src == mf.tgt) continue;
    for (int g : c.hom(mf.tgt, mf.src)) {
      int sf = c.object_index(mf.src), tf = c.object_index(mf.tgt);
      if (*c.try_compose(g, f) == c.identity_of(sf) && *c.try_compose(f, g) == c.identity_of(tf))
        return "isomorphism '" + mf.id + "' between distinct objects '" + mf.src + "' and '" +
               mf.tgt + "'";
    }
  }
  return std::nullopt;
}

FiniteCategory ordinal(int n) {
  if (n < 0) throw Error("ordinal requires n >= 0");
  CategoryBuilder b;
  auto name = [](int i, int j) { return "m" + std::to_string(i) + "_" + std::to_string(j); };
  for (int i = 0; i <= n; ++i) b.add_object(std::to_string(i));
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) b.add_morphism(name(i, j), std::to_string(i), std::to_string(j));
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) b.set_compose(name(j, k), name(i, j), name(i, k));
  return b.build();
}

CatPtr ordinal_ptr(int n) { return std::make_shared<FiniteCategory>(ordinal(n)); }

std::string unique_name(std::string base, const std::unordered_map<std::string, int>& taken) {
  while (taken.count(base) > 0) base += "'";
  return base;
}

}  // namespace acat
