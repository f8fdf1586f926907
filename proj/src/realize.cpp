#include "acat/realize.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace acat {

namespace {

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Topological check on the generator multigraph; throws with a cycle witness.
void require_acyclic_generators(const CatPresentation& p) {
  for (const GeneratorDecl& g : p.generators)
    if (g.src == g.tgt)
      throw Error("cyclic generator graph: loop generator '" + g.name + "' at '" + g.src + "'");

  std::unordered_map<std::string, std::vector<const GeneratorDecl*>> out;
  for (const GeneratorDecl& g : p.generators) out[g.src].push_back(&g);

  enum { White, Grey, Black };
  std::unordered_map<std::string, int> color;
  std::vector<std::string> stack;
  std::function<void(const std::string&)> dfs = [&](const std::string& v) {
    color[v] = Grey;
    stack.push_back(v);
    for (const GeneratorDecl* g : out[v]) {
      int c = color.count(g->tgt) ? color[g->tgt] : White;
      if (c == Grey) {
        std::string cycle = g->tgt;
        for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
          cycle += " -> " + *it;
          if (*it == g->tgt) break;
        }
        throw Error("cyclic generator graph: " + cycle);
      }
      if (c == White) dfs(g->tgt);
    }
    color[v] = Black;
    stack.pop_back();
  };
  for (const std::string& o : p.objects)
    if (!color.count(o)) dfs(o);
}

std::string path_name(const CatPresentation& p, const std::vector<int>& path) {
  // rendered target-side first: gN . ... . g1
  std::string out;
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    if (!out.empty()) out += ".";
    out += p.generators[*it].name;
  }
  return out;
}

}  // namespace

RealizeResult realize_category(const CatPresentation& p) {
  p.validate();
  require_acyclic_generators(p);

  const int ngen = static_cast<int>(p.generators.size());
  std::unordered_map<std::string, std::vector<int>> out_of;
  for (int g = 0; g < ngen; ++g) out_of[p.generators[g].src].push_back(g);

  // enumerate every composable generator sequence (application order)
  std::vector<std::vector<int>> paths;
  std::map<std::vector<int>, int> path_index;
  constexpr size_t kPathCap = 2000000;
  for (int g = 0; g < ngen; ++g) {
    paths.push_back({g});
    path_index[{g}] = static_cast<int>(paths.size()) - 1;
  }
  for (size_t i = 0; i < paths.size(); ++i) {
    const std::string& end = p.generators[paths[i].back()].tgt;
    for (int g : out_of[end]) {
      std::vector<int> ext = paths[i];
      ext.push_back(g);
      paths.push_back(ext);
      path_index[std::move(ext)] = static_cast<int>(paths.size()) - 1;
      if (paths.size() > kPathCap) throw Error("presentation has too many paths to realize");
    }
  }

  // relations as generator-index sequences
  std::vector<std::pair<std::vector<int>, std::vector<int>>> rels;
  for (const PathRelation& r : p.relations) {
    std::vector<int> l, rr;
    for (const std::string& n : r.lhs) l.push_back(p.generator_index(n));
    for (const std::string& n : r.rhs) rr.push_back(p.generator_index(n));
    rels.emplace_back(std::move(l), std::move(rr));
  }

  // congruence closure: union every one-step rewrite u.l.w ~ u.r.w
  DisjointSets dsu(static_cast<int>(paths.size()));
  for (size_t pi = 0; pi < paths.size(); ++pi) {
    const std::vector<int>& path = paths[pi];
    for (const auto& [lhs, rhs] : rels) {
      if (lhs.size() > path.size()) continue;
      for (size_t off = 0; off + lhs.size() <= path.size(); ++off) {
        if (!std::equal(lhs.begin(), lhs.end(), path.begin() + off)) continue;
        std::vector<int> rewritten(path.begin(), path.begin() + off);
        rewritten.insert(rewritten.end(), rhs.begin(), rhs.end());
        rewritten.insert(rewritten.end(), path.begin() + off + lhs.size(), path.end());
        auto it = path_index.find(rewritten);
        if (it == path_index.end()) throw Error("internal: rewritten path not enumerated");
        dsu.unite(static_cast<int>(pi), it->second);
      }
    }
  }

  // pick canonical representatives: shortest, then least rendered name
  std::unordered_map<int, int> class_rep;  // root -> path index
  auto better = [&](int a, int b) {
    if (paths[a].size() != paths[b].size()) return paths[a].size() < paths[b].size();
    return path_name(p, paths[a]) < path_name(p, paths[b]);
  };
  for (size_t pi = 0; pi < paths.size(); ++pi) {
    int root = dsu.find(static_cast<int>(pi));
    auto it = class_rep.find(root);
    if (it == class_rep.end() || better(static_cast<int>(pi), it->second))
      class_rep[root] = static_cast<int>(pi);
  }
  std::vector<int> reps;
  for (const auto& [root, rep] : class_rep) {
    (void)root;
    reps.push_back(rep);
  }
  std::sort(reps.begin(), reps.end(), [&](int a, int b) { return better(a, b); });

  CategoryBuilder builder;
  for (const std::string& o : p.objects) builder.add_object(o);
  std::unordered_map<int, std::string> class_name;  // dsu root -> morphism id
  for (int rep : reps) {
    const std::vector<int>& path = paths[rep];
    std::string id = path_name(p, path);
    builder.add_morphism(id, p.generators[path.front()].src, p.generators[path.back()].tgt);
    class_name[dsu.find(rep)] = id;
  }
  // composition by path concatenation: a acts first, then b
  for (int a : reps) {
    for (int b : reps) {
      const std::vector<int>& pa = paths[a];
      const std::vector<int>& pb = paths[b];
      if (p.generators[pa.back()].tgt != p.generators[pb.front()].src) continue;
      std::vector<int> cat = pa;
      cat.insert(cat.end(), pb.begin(), pb.end());
      auto it = path_index.find(cat);
      if (it == path_index.end()) throw Error("internal: concatenated path not enumerated");
      builder.set_compose(class_name.at(dsu.find(b)), class_name.at(dsu.find(a)),
                          class_name.at(dsu.find(it->second)));
    }
  }

  RealizeResult result;
  result.category = builder.build();
  result.ptr = std::make_shared<FiniteCategory>(result.category);
  for (int rep : reps) {
    const std::vector<int>& path = paths[rep];
    std::vector<std::string> names;
    for (int g : path) names.push_back(p.generators[g].name);
    result.rep_path[path_name(p, path)] = std::move(names);
  }
  for (int g = 0; g < ngen; ++g) {
    auto it = path_index.find({g});
    result.generator_morphism[p.generators[g].name] = class_name.at(dsu.find(it->second));
  }
  for (const std::string& o : p.objects) result.rep_path[identity_name(o)] = {};
  return result;
}

CatPresentation present_category(const FiniteCategory& c) {
  CatPresentation p;
  p.name = "representation";
  p.objects = c.objects();
  for (const Morphism& m : c.morphisms())
    if (!c.is_identity(c.morphism_index(m.id))) p.generators.push_back({m.id, m.src, m.tgt});
  const int n = c.morphism_count();
  for (int g = 0; g < n; ++g) {
    if (c.is_identity(g)) continue;
    for (int f = 0; f < n; ++f) {
      if (c.is_identity(f)) continue;
      auto comp = c.try_compose(g, f);
      if (!comp) continue;
      if (c.is_identity(*comp))
        throw Error("cannot present a category where non-identities compose to an identity");
      PathRelation r;
      r.lhs = {c.morphism(f).id, c.morphism(g).id};
      r.rhs = {c.morphism(*comp).id};
      p.relations.push_back(std::move(r));
    }
  }
  return p;
}

}  // namespace acat
