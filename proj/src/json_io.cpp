#include "acat/json_io.hpp"

namespace acat {

Json category_to_json(const FiniteCategory& c) {
  Json j;
  j["type"] = "category";
  j["objects"] = c.objects();
  Json mors = Json::array();
  for (const Morphism& m : c.morphisms())
    mors.push_back({{"id", m.id}, {"src", m.src}, {"tgt", m.tgt}});
  j["morphisms"] = mors;
  Json ids = Json::object();
  for (int o = 0; o < c.object_count(); ++o)
    ids[c.objects()[o]] = c.morphism(c.identity_of(o)).id;
  j["identities"] = ids;
  Json comp = Json::array();
  for (int g = 0; g < c.morphism_count(); ++g)
    for (int f = 0; f < c.morphism_count(); ++f)
      if (auto r = c.try_compose(g, f))
        comp.push_back({c.morphism(g).id, c.morphism(f).id, c.morphism(*r).id});
  j["composition"] = comp;
  return j;
}

FiniteCategory category_from_json(const Json& j) {
  if (!j.contains("objects") || !j.contains("morphisms"))
    throw ParseError("category JSON needs 'objects' and 'morphisms'");
  std::vector<std::string> objects = j.at("objects").get<std::vector<std::string>>();
  std::vector<Morphism> morphisms;
  std::unordered_map<std::string, int> midx;
  for (const Json& m : j.at("morphisms")) {
    Morphism mm{m.at("id").get<std::string>(), m.at("src").get<std::string>(),
                m.at("tgt").get<std::string>()};
    midx[mm.id] = static_cast<int>(morphisms.size());
    morphisms.push_back(std::move(mm));
  }
  std::vector<int> identity(objects.size(), -1);
  for (size_t o = 0; o < objects.size(); ++o) {
    const Json& ids = j.at("identities");
    if (!ids.contains(objects[o])) throw ParseError("missing identity for '" + objects[o] + "'");
    identity[o] = midx.at(ids.at(objects[o]).get<std::string>());
  }
  const int m = static_cast<int>(morphisms.size());
  std::vector<int> table(static_cast<size_t>(m) * m, -1);
  for (const Json& t : j.at("composition")) {
    int g = midx.at(t.at(0).get<std::string>());
    int f = midx.at(t.at(1).get<std::string>());
    table[static_cast<size_t>(g) * m + f] = midx.at(t.at(2).get<std::string>());
  }
  FiniteCategory c(std::move(objects), std::move(morphisms), std::move(identity),
                   std::move(table));
  c.validate();
  return c;
}

Json functor_to_json(const Functor& f, const std::string& name) {
  Json j;
  j["type"] = "functor";
  if (!name.empty()) j["name"] = name;
  j["source"] = category_to_json(*f.source);
  j["target"] = category_to_json(*f.target);
  j["object_map"] = Json(std::map<std::string, std::string>(f.object_map.begin(), f.object_map.end()));
  j["morphism_map"] =
      Json(std::map<std::string, std::string>(f.morphism_map.begin(), f.morphism_map.end()));
  return j;
}

Functor functor_from_json(const Json& j) {
  Functor f;
  f.source = std::make_shared<FiniteCategory>(category_from_json(j.at("source")));
  f.target = std::make_shared<FiniteCategory>(category_from_json(j.at("target")));
  for (auto it = j.at("object_map").begin(); it != j.at("object_map").end(); ++it)
    f.object_map[it.key()] = it.value().get<std::string>();
  for (auto it = j.at("morphism_map").begin(); it != j.at("morphism_map").end(); ++it)
    f.morphism_map[it.key()] = it.value().get<std::string>();
  CheckResult r = check_functor(f);
  if (!r) throw ParseError("functor JSON: " + r.witness);
  return f;
}

Json complex_to_json(const SemiSimplicialSet& x) {
  Json j;
  j["type"] = "complex";
  Json simplices = Json::array();
  for (int n = 0; n <= x.top_dim(); ++n) {
    Json level = Json::array();
    for (int s = 0; s < x.count(n); ++s) level.push_back(x.name({n, s}));
    simplices.push_back(level);
  }
  j["simplices"] = simplices;
  Json faces = Json::array();
  for (int n = 1; n <= x.top_dim(); ++n) {
    Json level = Json::array();
    for (int s = 0; s < x.count(n); ++s) {
      Json row = Json::array();
      for (int i = 0; i <= n; ++i) {
        const FormalSimplex& f = x.face(n, s, i);
        Json e;
        e["dim"] = f.target.dim;
        e["t"] = x.name(f.target);
        if (f.degenerate()) e["s"] = f.surj;
        row.push_back(e);
      }
      level.push_back(row);
    }
    faces.push_back(level);
  }
  j["faces"] = faces;
  return j;
}

SemiSimplicialSet complex_from_json(const Json& j) {
  SemiSimplicialSet x;
  const Json& simplices = j.at("simplices");
  std::vector<std::unordered_map<std::string, int>> index(simplices.size());
  for (size_t n = 0; n < simplices.size(); ++n) {
    for (size_t s = 0; s < simplices[n].size(); ++s) {
      std::string name = simplices[n][s].get<std::string>();
      std::vector<FormalSimplex> faces;
      if (n >= 1) {
        const Json& row = j.at("faces").at(n - 1).at(s);
        for (const Json& e : row) {
          int dim = e.at("dim").get<int>();
          int idx = index.at(dim).at(e.at("t").get<std::string>());
          MonotoneMap surj =
              e.contains("s") ? e.at("s").get<MonotoneMap>() : mono_identity(dim + 1);
          faces.push_back({{dim, idx}, surj});
        }
      }
      index[n][name] = x.add_simplex(static_cast<int>(n), name, std::move(faces));
    }
  }
  x.validate();
  return x;
}

Json homology_to_json(const std::vector<HomologyGroup>& groups, long long euler) {
  Json j;
  j["type"] = "homology";
  j["euler"] = euler;
  Json gs = Json::array();
  for (const HomologyGroup& g : groups)
    gs.push_back({{"degree", g.degree}, {"betti", g.betti}, {"torsion", g.torsion}});
  j["groups"] = gs;
  return j;
}

std::string homology_to_text(const std::vector<HomologyGroup>& groups, long long euler) {
  std::string out;
  for (const HomologyGroup& g : groups)
    out += "H_" + std::to_string(g.degree) + " = " + group_to_string(g) + "\n";
  out += "euler characteristic = " + std::to_string(euler) + "\n";
  return out;
}

Json cup_report_to_json(const CupReport& r) {
  Json j;
  j["type"] = "cup_report";
  Json gs = Json::array();
  for (const HomologyGroup& g : r.groups)
    gs.push_back({{"degree", g.degree}, {"betti", g.betti}, {"torsion", g.torsion}});
  j["groups"] = gs;
  Json ps = Json::array();
  for (const CupPairing& p : r.pairings) {
    std::vector<long long> coords;
    for (const Int& c : p.coords) coords.push_back(c.convert_to<long long>());
    ps.push_back({{"p", p.p}, {"q", p.q}, {"left", p.left}, {"right", p.right},
                  {"coords", coords}});
  }
  j["products"] = ps;
  if (r.hopf)
    j["hopf_invariant"] = *r.hopf;
  else
    j["hopf_invariant"] = nullptr;
  return j;
}

}  // namespace acat
