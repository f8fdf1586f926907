#include "acat/constructions.hpp"

#include <algorithm>

namespace acat {

namespace {

struct DisjointNames {
  std::unordered_map<std::string, std::string> parent;
  void add(const std::string& x) {
    if (!parent.count(x)) parent[x] = x;
  }
  std::string find(std::string x) {
    while (parent.at(x) != x) x = parent.at(x);
    return x;
  }
  void unite(const std::string& a, const std::string& b) {
    std::string ra = find(a), rb = find(b);
    if (ra == rb) return;
    // keep the lexicographically least name as the class representative
    if (ra < rb)
      parent[rb] = ra;
    else
      parent[ra] = rb;
  }
};

}  // namespace

const std::string& CylinderResult::cross_id(const std::string& a_obj,
                                            const std::string& b_mor) const {
  auto it = cross.find({a_obj, b_mor});
  if (it == cross.end())
    throw Error("no cross morphism for ('" + a_obj + "', '" + b_mor + "')");
  return it->second;
}

CylinderResult mapping_cylinder(const Functor& f) {
  CheckResult fc = check_functor(f);
  if (!fc) throw Error("mapping_cylinder: not a functor: " + fc.witness);
  const FiniteCategory& A = *f.source;
  const FiniteCategory& B = *f.target;

  CategoryBuilder b;
  std::unordered_map<std::string, int> taken_obj, taken_mor;
  std::unordered_map<std::string, std::string> bobj, bmor;  // B names -> cylinder names

  for (const std::string& x : A.objects()) {
    b.add_object(x);
    taken_obj[x] = 1;
  }
  for (const std::string& y : B.objects()) {
    std::string ny = unique_name(y, taken_obj);
    b.add_object(ny);
    taken_obj[ny] = 1;
    bobj[y] = ny;
  }
  for (const Morphism& m : A.morphisms()) taken_mor[m.id] = 1;
  for (const Morphism& m : A.morphisms())
    if (!A.is_identity(A.morphism_index(m.id))) b.add_morphism(m.id, m.src, m.tgt);
  for (const Morphism& m : B.morphisms()) {
    if (B.is_identity(B.morphism_index(m.id))) {
      bmor[m.id] = identity_name(bobj.at(m.src));
      continue;
    }
    std::string nm = unique_name(m.id, taken_mor);
    taken_mor[nm] = 1;
    bmor[m.id] = nm;
    b.add_morphism(nm, bobj.at(m.src), bobj.at(m.tgt));
  }

  // cross morphisms: one per pair (x in A, b in B with src(b) = Fx)
  std::map<std::pair<std::string, std::string>, std::string> cross;
  for (const std::string& x : A.objects()) {
    const std::string& fx = f.obj(x);
    for (const Morphism& m : B.morphisms()) {
      if (m.src != fx) continue;
      std::string id;
      if (B.is_identity(B.morphism_index(m.id)))
        id = "a[" + x + "]";
      else
        id = m.id + ".a[" + x + "]";
      id = unique_name(id, taken_mor);
      taken_mor[id] = 1;
      cross[{x, m.id}] = id;
      b.add_morphism(id, x, bobj.at(m.tgt));
    }
  }

  // composition tables
  auto nonid = [](const FiniteCategory& c, int i) { return !c.is_identity(i); };
  const int ma = A.morphism_count();
  for (int g = 0; g < ma; ++g)
    for (int h = 0; h < ma; ++h) {
      auto comp = A.try_compose(g, h);
      if (comp && nonid(A, g) && nonid(A, h))
        b.set_compose(A.morphism(g).id, A.morphism(h).id, A.morphism(*comp).id);
    }
  const int mb = B.morphism_count();
  for (int g = 0; g < mb; ++g)
    for (int h = 0; h < mb; ++h) {
      auto comp = B.try_compose(g, h);
      if (comp && nonid(B, g) && nonid(B, h))
        b.set_compose(bmor.at(B.morphism(g).id), bmor.at(B.morphism(h).id),
                      bmor.at(B.morphism(*comp).id));
    }
  // cross(x, m) after u : x' -> x   =   cross(x', m . F(u))
  for (const auto& [key, id] : cross) {
    const auto& [x, m] = key;
    for (const Morphism& u : A.morphisms()) {
      if (u.tgt != x || A.is_identity(A.morphism_index(u.id))) continue;
      const std::string& fu = f.mor(u.id);
      const std::string& mfu = B.compose_ids(m, fu);
      b.set_compose(id, u.id, cross.at({u.src, mfu}));
    }
    // v after cross(x, m)   =   cross(x, v . m)
    int mi = B.morphism_index(m);
    for (const Morphism& v : B.morphisms()) {
      if (B.is_identity(B.morphism_index(v.id))) continue;
      if (v.src != B.morphism(mi).tgt) continue;
      const std::string& vm = B.compose_ids(v.id, m);
      b.set_compose(bmor.at(v.id), id, cross.at({x, vm}));
    }
  }

  CylinderResult out;
  out.base = f;
  out.cylinder = b.build_ptr();

  out.include_source.source = f.source;
  out.include_source.target = out.cylinder;
  for (const std::string& x : A.objects()) out.include_source.object_map[x] = x;
  for (const Morphism& m : A.morphisms()) out.include_source.morphism_map[m.id] = m.id;

  out.include_target.source = f.target;
  out.include_target.target = out.cylinder;
  out.include_target.object_map = bobj;
  out.include_target.morphism_map = bmor;

  out.cross = cross;
  for (const auto& [key, id] : cross) out.cross_decode[id] = key;

  out.seam.source = out.include_source;
  out.seam.target = compose_functors(out.include_target, f);
  for (const std::string& x : A.objects())
    out.seam.components[x] = cross.at({x, B.identity_id(f.obj(x))});

  CheckResult r;
  if (!(r = check_functor(out.include_source)))
    throw ValidationError("cylinder source inclusion: " + r.witness);
  if (!(r = check_functor(out.include_target)))
    throw ValidationError("cylinder target inclusion: " + r.witness);
  if (!(r = check_natural(out.seam))) throw ValidationError("cylinder seam: " + r.witness);
  return out;
}

Functor cylinder_factorize(const CylinderResult& cyl, const Functor& h, const Functor& k,
                           const NaturalTransformation& r) {
  const Functor& f = cyl.base;
  if (!(*h.source == *f.source) || !(*k.source == *f.target) || !(*h.target == *k.target))
    throw Error("cylinder_factorize: square does not match the cylinder");
  CheckResult c;
  if (!(c = check_functor(h))) throw Error("cylinder_factorize: H: " + c.witness);
  if (!(c = check_functor(k))) throw Error("cylinder_factorize: K: " + c.witness);
  if (!same_functor(r.source, h) || !same_functor(r.target, compose_functors(k, f)))
    throw Error("cylinder_factorize: transformation does not fill the square");
  if (!(c = check_natural(r))) throw Error("cylinder_factorize: r not natural: " + c.witness);

  const FiniteCategory& X = *h.target;
  Functor g;
  g.source = cyl.cylinder;
  g.target = h.target;
  for (const auto& [x, cx] : cyl.include_source.object_map) g.object_map[cx] = h.obj(x);
  for (const auto& [y, cy] : cyl.include_target.object_map) g.object_map[cy] = k.obj(y);
  for (const auto& [m, cm] : cyl.include_source.morphism_map) g.morphism_map[cm] = h.mor(m);
  for (const auto& [m, cm] : cyl.include_target.morphism_map) g.morphism_map[cm] = k.mor(m);
  for (const auto& [id, key] : cyl.cross_decode) {
    const auto& [x, bm] = key;
    g.morphism_map[id] = X.compose_ids(k.mor(bm), r.at(x));
  }
  if (!(c = check_functor(g))) throw ValidationError("cylinder_factorize result: " + c.witness);
  if (!same_functor(compose_functors(g, cyl.include_source), h))
    throw ValidationError("cylinder_factorize: G . i_A != H");
  if (!same_functor(compose_functors(g, cyl.include_target), k))
    throw ValidationError("cylinder_factorize: G . i_B != K");
  return g;
}

ProductWithArrow product_with_arrow(const CatPtr& a) {
  const FiniteCategory& A = *a;
  const int m = A.morphism_count();
  CategoryBuilder b;
  auto oname = [](const std::string& x, int lvl) { return x + (lvl == 0 ? "@0" : "@1"); };
  for (const std::string& x : A.objects()) {
    b.add_object(oname(x, 0));
    b.add_object(oname(x, 1));
  }
  ProductWithArrow out;
  for (const std::string& x : A.objects()) {
    out.decode_object[oname(x, 0)] = {x, 0};
    out.decode_object[oname(x, 1)] = {x, 1};
  }

  // names for every pair (A-morphism, level); identity pairs keep identity names
  std::unordered_map<std::string, int> taken;
  std::vector<std::array<std::string, 3>> name(m);
  for (int i = 0; i < m; ++i) {
    const Morphism& u = A.morphism(i);
    bool uid = A.is_identity(i);
    if (uid) {
      name[i][ProductWithArrow::kBottom] = identity_name(oname(u.src, 0));
      name[i][ProductWithArrow::kTop] = identity_name(oname(u.src, 1));
    } else {
      name[i][ProductWithArrow::kBottom] = unique_name(u.id + "@0", taken);
      taken[name[i][ProductWithArrow::kBottom]] = 1;
      name[i][ProductWithArrow::kTop] = unique_name(u.id + "@1", taken);
      taken[name[i][ProductWithArrow::kTop]] = 1;
    }
    name[i][ProductWithArrow::kStep] = unique_name((uid ? u.src : u.id) + "@01", taken);
    taken[name[i][ProductWithArrow::kStep]] = 1;
  }
  for (int i = 0; i < m; ++i) {
    const Morphism& u = A.morphism(i);
    bool uid = A.is_identity(i);
    if (!uid) {
      b.add_morphism(name[i][ProductWithArrow::kBottom], oname(u.src, 0), oname(u.tgt, 0));
      b.add_morphism(name[i][ProductWithArrow::kTop], oname(u.src, 1), oname(u.tgt, 1));
    }
    b.add_morphism(name[i][ProductWithArrow::kStep], oname(u.src, 0), oname(u.tgt, 1));
    for (int lvl = 0; lvl < 3; ++lvl) out.decode_morphism[name[i][lvl]] = {u.id, lvl};
  }

  // componentwise composition; valid level pairs: 0.0=0, 01.0=01, 1.01=01, 1.1=1
  auto compose_level = [](int g, int f) -> int {
    if (f == ProductWithArrow::kBottom &&
        (g == ProductWithArrow::kBottom || g == ProductWithArrow::kStep))
      return g;
    if (f == ProductWithArrow::kStep && g == ProductWithArrow::kTop)
      return ProductWithArrow::kStep;
    if (f == ProductWithArrow::kTop && g == ProductWithArrow::kTop)
      return ProductWithArrow::kTop;
    return -1;
  };
  for (int g = 0; g < m; ++g) {
    for (int f = 0; f < m; ++f) {
      auto comp = A.try_compose(g, f);
      if (!comp) continue;
      for (int lg = 0; lg < 3; ++lg)
        for (int lf = 0; lf < 3; ++lf) {
          int lc = compose_level(lg, lf);
          if (lc < 0) continue;
          // skip pairs with an identity operand; the builder fills unit laws
          bool g_identity = A.is_identity(g) && lg != ProductWithArrow::kStep;
          bool f_identity = A.is_identity(f) && lf != ProductWithArrow::kStep;
          if (g_identity || f_identity) continue;
          b.set_compose(name[g][lg], name[f][lf], name[*comp][lc]);
        }
    }
  }
  out.product = b.build_ptr();

  out.include_bottom.source = a;
  out.include_bottom.target = out.product;
  out.include_top.source = a;
  out.include_top.target = out.product;
  for (const std::string& x : A.objects()) {
    out.include_bottom.object_map[x] = oname(x, 0);
    out.include_top.object_map[x] = oname(x, 1);
  }
  for (int i = 0; i < m; ++i) {
    const Morphism& u = A.morphism(i);
    out.include_bottom.morphism_map[u.id] = name[i][ProductWithArrow::kBottom];
    out.include_top.morphism_map[u.id] = name[i][ProductWithArrow::kTop];
  }
  CheckResult r;
  if (!(r = check_functor(out.include_bottom)))
    throw ValidationError("product inclusion at 0: " + r.witness);
  if (!(r = check_functor(out.include_top)))
    throw ValidationError("product inclusion at 1: " + r.witness);
  return out;
}

CylinderResult cone(const CatPtr& c) {
  CatPtr point = ordinal_ptr(0);
  Functor to_point;
  to_point.source = c;
  to_point.target = point;
  for (const std::string& x : c->objects()) to_point.object_map[x] = "0";
  for (const Morphism& m : c->morphisms()) to_point.morphism_map[m.id] = point->identity_id("0");
  return mapping_cylinder(to_point);
}

PushoutResult pushout(const Functor& f, const Functor& g, const std::string& tag_left,
                      const std::string& tag_right) {
  CheckResult c;
  if (!(c = check_functor(f))) throw Error("pushout: left leg: " + c.witness);
  if (!(c = check_functor(g))) throw Error("pushout: right leg: " + c.witness);
  if (!(*f.source == *g.source)) throw Error("pushout: span legs have different sources");
  if (!injective_on_objects(f) || !injective_on_objects(g))
    throw Error("pushout: span legs must be injective on objects");

  const FiniteCategory& A = *f.source;
  const FiniteCategory& B = *f.target;
  const FiniteCategory& C = *g.target;

  auto tagged = [](const std::string& tag, const std::string& name) { return tag + "." + name; };

  for (const Morphism& m : A.morphisms()) {
    if (A.is_identity(A.morphism_index(m.id))) continue;
    if (B.is_identity(B.morphism_index(f.mor(m.id))) ||
        C.is_identity(C.morphism_index(g.mor(m.id))))
      throw Error("pushout: leg collapses morphism '" + m.id + "' to an identity");
  }

  // object classes
  DisjointNames objs;
  for (const std::string& x : B.objects()) objs.add(tagged(tag_left, x));
  for (const std::string& x : C.objects()) objs.add(tagged(tag_right, x));
  for (const std::string& x : A.objects())
    objs.unite(tagged(tag_left, f.obj(x)), tagged(tag_right, g.obj(x)));

  CatPresentation pres;
  pres.name = "pushout";
  {
    std::vector<std::string> names;
    for (const std::string& x : B.objects()) names.push_back(objs.find(tagged(tag_left, x)));
    for (const std::string& x : C.objects()) names.push_back(objs.find(tagged(tag_right, x)));
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());
    pres.objects = names;
  }

  PushoutResult out;
  out.span_left = f;
  out.span_right = g;

  auto add_side = [&](const FiniteCategory& cat, const std::string& tag, int side) {
    for (const Morphism& m : cat.morphisms()) {
      if (cat.is_identity(cat.morphism_index(m.id))) continue;
      std::string name = tagged(tag, m.id);
      pres.generators.push_back(
          {name, objs.find(tagged(tag, m.src)), objs.find(tagged(tag, m.tgt))});
      out.gen_origin[name] = {side, m.id};
    }
    const int n = cat.morphism_count();
    for (int gg = 0; gg < n; ++gg) {
      if (cat.is_identity(gg)) continue;
      for (int hh = 0; hh < n; ++hh) {
        if (cat.is_identity(hh)) continue;
        auto comp = cat.try_compose(gg, hh);
        if (!comp) continue;
        if (cat.is_identity(*comp))
          throw Error("pushout: side category composes non-identities to an identity");
        PathRelation r;
        r.lhs = {tagged(tag, cat.morphism(hh).id), tagged(tag, cat.morphism(gg).id)};
        r.rhs = {tagged(tag, cat.morphism(*comp).id)};
        pres.relations.push_back(std::move(r));
      }
    }
  };
  add_side(B, tag_left, 0);
  add_side(C, tag_right, 1);

  for (const Morphism& m : A.morphisms()) {
    if (A.is_identity(A.morphism_index(m.id))) continue;
    PathRelation r;
    r.lhs = {tagged(tag_left, f.mor(m.id))};
    r.rhs = {tagged(tag_right, g.mor(m.id))};
    pres.relations.push_back(std::move(r));
  }

  RealizeResult rr = realize_category(pres);
  out.apex = rr.ptr;
  out.rep_path = rr.rep_path;

  auto make_leg = [&](const FiniteCategory& cat, const std::string& tag, const Functor& /*leg*/) {
    Functor leg;
    leg.target = out.apex;
    for (const std::string& x : cat.objects())
      leg.object_map[x] = objs.find(tagged(tag, x));
    for (const Morphism& m : cat.morphisms()) {
      if (cat.is_identity(cat.morphism_index(m.id)))
        leg.morphism_map[m.id] = identity_name(leg.object_map.at(m.src));
      else
        leg.morphism_map[m.id] = rr.generator_morphism.at(tagged(tag, m.id));
    }
    return leg;
  };
  out.leg_left = make_leg(B, tag_left, f);
  out.leg_left.source = f.target;
  out.leg_right = make_leg(C, tag_right, g);
  out.leg_right.source = g.target;

  if (!(c = check_functor(out.leg_left))) throw ValidationError("pushout left leg: " + c.witness);
  if (!(c = check_functor(out.leg_right)))
    throw ValidationError("pushout right leg: " + c.witness);
  if (!same_functor(compose_functors(out.leg_left, f), compose_functors(out.leg_right, g)))
    throw ValidationError("pushout legs do not agree on the span source");
  return out;
}

Functor pushout_mediate(const PushoutResult& po, const Functor& from_left,
                        const Functor& from_right) {
  CheckResult c;
  if (!(c = check_functor(from_left))) throw Error("pushout_mediate: left cocone: " + c.witness);
  if (!(c = check_functor(from_right)))
    throw Error("pushout_mediate: right cocone: " + c.witness);
  if (!(*from_left.source == *po.span_left.target) ||
      !(*from_right.source == *po.span_right.target) || !(*from_left.target == *from_right.target))
    throw Error("pushout_mediate: cocone shape mismatch");
  if (!same_functor(compose_functors(from_left, po.span_left),
                    compose_functors(from_right, po.span_right)))
    throw Error("pushout_mediate: cocone does not commute over the span");

  const FiniteCategory& X = *from_left.target;
  const FiniteCategory& P = *po.apex;
  Functor u;
  u.source = po.apex;
  u.target = from_left.target;

  // objects via the legs
  for (const auto& [x, px] : po.leg_left.object_map) {
    auto it = u.object_map.find(px);
    const std::string& val = from_left.obj(x);
    if (it != u.object_map.end() && it->second != val)
      throw Error("pushout_mediate: inconsistent object images");
    u.object_map[px] = val;
  }
  for (const auto& [x, px] : po.leg_right.object_map) {
    auto it = u.object_map.find(px);
    const std::string& val = from_right.obj(x);
    if (it != u.object_map.end() && it->second != val)
      throw Error("pushout_mediate: inconsistent object images");
    u.object_map[px] = val;
  }

  for (const Morphism& m : P.morphisms()) {
    if (P.is_identity(P.morphism_index(m.id))) {
      u.morphism_map[m.id] = X.identity_id(u.object_map.at(m.src));
      continue;
    }
    const std::vector<std::string>& path = po.rep_path.at(m.id);
    int cur = -1;
    for (const std::string& gen : path) {
      const auto& [side, orig] = po.gen_origin.at(gen);
      const Functor& leg = side == 0 ? from_left : from_right;
      int img = X.morphism_index(leg.mor(orig));
      cur = cur < 0 ? img : X.compose(img, cur);
    }
    u.morphism_map[m.id] = X.morphism(cur).id;
  }
  if (!(c = check_functor(u))) throw ValidationError("pushout_mediate result: " + c.witness);
  if (!same_functor(compose_functors(u, po.leg_left), from_left))
    throw ValidationError("pushout_mediate: left triangle fails");
  if (!same_functor(compose_functors(u, po.leg_right), from_right))
    throw ValidationError("pushout_mediate: right triangle fails");
  return u;
}

ArrowPushout arrow_pushout(const CatSquare& left_square, const CatSquare& right_square,
                           const std::string& tag_left, const std::string& tag_right,
                           const std::string& tag_base_left, const std::string& tag_base_right) {
  if (!same_functor(compose_functors(left_square.right, left_square.top),
                    compose_functors(left_square.bottom, left_square.left)))
    throw Error("arrow_pushout: left square does not commute");
  if (!same_functor(compose_functors(right_square.right, right_square.top),
                    compose_functors(right_square.bottom, right_square.left)))
    throw Error("arrow_pushout: right square does not commute");
  if (!same_functor(left_square.left, right_square.left))
    throw Error("arrow_pushout: squares have different vertical edges");

  ArrowPushout out;
  out.domain = pushout(left_square.top, right_square.top, tag_left, tag_right);
  out.codomain =
      pushout(left_square.bottom, right_square.bottom, tag_base_left, tag_base_right);
  Functor from_left = compose_functors(out.codomain.leg_left, left_square.right);
  Functor from_right = compose_functors(out.codomain.leg_right, right_square.right);
  out.mediating = pushout_mediate(out.domain, from_left, from_right);
  return out;
}

PushoutResult cone_pushout(const CylinderResult& cone_of_p, const Functor& h) {
  const Functor& i0 = cone_of_p.include_source;
  if (!(*i0.source == *h.source)) throw Error("cone_pushout: span sources differ");
  CheckResult c;
  if (!(c = check_functor(h))) throw Error("cone_pushout: " + c.witness);

  const FiniteCategory& P = *h.source;
  const FiniteCategory& Q = *h.target;
  const FiniteCategory& CP = *cone_of_p.cylinder;

  // apex object of the cone: the unique object outside the image of i0
  std::string apex_obj;
  {
    std::unordered_map<std::string, int> hit;
    for (const auto& [x, cx] : i0.object_map) {
      (void)x;
      hit[cx] = 1;
    }
    for (const std::string& o : CP.objects())
      if (!hit.count(o)) apex_obj = o;
  }
  if (apex_obj.empty()) throw Error("cone_pushout: cone has no apex");

  CatPresentation pres;
  pres.name = "cone_pushout";
  pres.objects = Q.objects();
  std::string r_apex = apex_obj;
  {
    std::unordered_map<std::string, int> taken;
    for (const std::string& o : pres.objects) taken[o] = 1;
    r_apex = unique_name(r_apex, taken);
  }
  pres.objects.push_back(r_apex);

  // generators: Q's non-identities plus one seam generator per object of P
  for (const Morphism& m : Q.morphisms())
    if (!Q.is_identity(Q.morphism_index(m.id))) pres.generators.push_back({m.id, m.src, m.tgt});
  auto seam_name = [&](const std::string& x) { return "a[" + x + "]"; };
  for (const std::string& x : P.objects())
    pres.generators.push_back({seam_name(x), h.obj(x), r_apex});

  // relations: Q's composition facts ...
  const int nq = Q.morphism_count();
  for (int g = 0; g < nq; ++g) {
    if (Q.is_identity(g)) continue;
    for (int f = 0; f < nq; ++f) {
      if (Q.is_identity(f)) continue;
      auto comp = Q.try_compose(g, f);
      if (!comp) continue;
      PathRelation r;
      r.lhs = {Q.morphism(f).id, Q.morphism(g).id};
      r.rhs = {Q.morphism(*comp).id};
      pres.relations.push_back(std::move(r));
    }
  }
  // ... plus seam compatibility: a[y] . H(m) = a[x] for every m : x -> y in P
  for (const Morphism& m : P.morphisms()) {
    if (P.is_identity(P.morphism_index(m.id))) continue;
    PathRelation r;
    const std::string& hm = h.mor(m.id);
    if (Q.is_identity(Q.morphism_index(hm)))
      r.lhs = {seam_name(m.tgt)};
    else
      r.lhs = {hm, seam_name(m.tgt)};
    r.rhs = {seam_name(m.src)};
    pres.relations.push_back(std::move(r));
  }

  RealizeResult rr = realize_category(pres);

  PushoutResult out;
  out.span_left = i0;
  out.span_right = h;
  out.apex = rr.ptr;
  out.rep_path = rr.rep_path;
  for (const Morphism& m : Q.morphisms())
    if (!Q.is_identity(Q.morphism_index(m.id))) out.gen_origin[m.id] = {1, m.id};
  for (const std::string& x : P.objects())
    out.gen_origin[seam_name(x)] = {0, cone_of_p.seam.components.at(x)};

  // right leg: Q included by its generators
  out.leg_right.source = h.target;
  out.leg_right.target = out.apex;
  for (const std::string& x : Q.objects()) out.leg_right.object_map[x] = x;
  for (const Morphism& m : Q.morphisms())
    out.leg_right.morphism_map[m.id] = Q.is_identity(Q.morphism_index(m.id))
                                           ? identity_name(m.src)
                                           : rr.generator_morphism.at(m.id);

  // left leg: the cone maps through H on the base and through the seams
  out.leg_left.source = cone_of_p.cylinder;
  out.leg_left.target = out.apex;
  for (const auto& [x, cx] : i0.object_map) out.leg_left.object_map[cx] = h.obj(x);
  out.leg_left.object_map[apex_obj] = r_apex;
  for (const auto& [m, cm] : i0.morphism_map)
    out.leg_left.morphism_map[cm] = out.leg_right.mor(h.mor(m));
  out.leg_left.morphism_map[CP.identity_id(apex_obj)] = identity_name(r_apex);
  for (const auto& [id, key] : cone_of_p.cross_decode) {
    const std::string& x = key.first;  // cross morphisms of a cone are the seams
    out.leg_left.morphism_map[id] = rr.generator_morphism.at(seam_name(x));
  }

  if (!(c = check_functor(out.leg_left))) throw ValidationError("cone_pushout left leg: " + c.witness);
  if (!(c = check_functor(out.leg_right)))
    throw ValidationError("cone_pushout right leg: " + c.witness);
  if (!same_functor(compose_functors(out.leg_left, i0), compose_functors(out.leg_right, h)))
    throw ValidationError("cone_pushout legs do not agree on the span source");
  return out;
}

}  // namespace acat
