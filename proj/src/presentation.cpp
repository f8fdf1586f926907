#include "acat/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace acat {

namespace {

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

bool valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

// parse "gN . ... . g1" (possibly without spaces around dots); result in
// application order, i.e. reversed
std::vector<std::string> parse_path(const std::string& text, int line) {
  std::string compact;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  if (compact.empty()) throw ParseError(line, "empty path");
  std::vector<std::string> parts;
  std::string cur;
  for (char c : compact) {
    if (c == '.') {
      if (cur.empty()) throw ParseError(line, "empty path component");
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (cur.empty()) throw ParseError(line, "empty path component");
  parts.push_back(cur);
  for (const std::string& p : parts)
    if (!valid_identifier(p)) throw ParseError(line, "invalid identifier '" + p + "' in path");
  std::reverse(parts.begin(), parts.end());
  return parts;
}

}  // namespace

int CatPresentation::generator_index(const std::string& gname) const {
  for (size_t i = 0; i < generators.size(); ++i)
    if (generators[i].name == gname) return static_cast<int>(i);
  return -1;
}

void CatPresentation::validate() const {
  std::unordered_map<std::string, int> objs;
  for (const std::string& o : objects) {
    if (!objs.emplace(o, 1).second) throw ValidationError("duplicate object '" + o + "'");
  }
  std::unordered_map<std::string, const GeneratorDecl*> gens;
  for (const GeneratorDecl& g : generators) {
    if (!gens.emplace(g.name, &g).second)
      throw ValidationError("duplicate generator name '" + g.name + "'");
    if (!objs.count(g.src))
      throw ValidationError("generator '" + g.name + "' has undeclared source '" + g.src + "'");
    if (!objs.count(g.tgt))
      throw ValidationError("generator '" + g.name + "' has undeclared target '" + g.tgt + "'");
  }
  auto check_path = [&](const std::vector<std::string>& path, int line) {
    if (path.empty()) throw ParseError(line, "relation side is empty");
    const GeneratorDecl* prev = nullptr;
    for (const std::string& name : path) {
      auto it = gens.find(name);
      if (it == gens.end()) throw ParseError(line, "relation references unknown arrow '" + name + "'");
      if (prev && prev->tgt != it->second->src)
        throw ParseError(line, "path is not composable at '" + name + "'");
      prev = it->second;
    }
    return std::pair<std::string, std::string>{gens.at(path.front())->src,
                                               gens.at(path.back())->tgt};
  };
  for (const PathRelation& r : relations) {
    auto lhs = check_path(r.lhs, r.line);
    auto rhs = check_path(r.rhs, r.line);
    if (lhs != rhs)
      throw ParseError(r.line, "relation sides are not parallel: " + lhs.first + "->" + lhs.second +
                                   " vs " + rhs.first + "->" + rhs.second);
  }
}

CatPresentation parse_presentation(const std::string& text) {
  CatPresentation p;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  bool saw_category = false;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = strip_comment(raw);
    std::vector<std::string> toks = tokenize(line);
    if (toks.empty()) continue;
    const std::string& kw = toks[0];
    if (kw == "category") {
      if (toks.size() != 2) throw ParseError(lineno, "expected: category <name>");
      if (saw_category) throw ParseError(lineno, "duplicate category line");
      if (!valid_identifier(toks[1])) throw ParseError(lineno, "invalid category name");
      p.name = toks[1];
      saw_category = true;
    } else if (kw == "objects") {
      if (toks.size() < 2) throw ParseError(lineno, "expected: objects <id> ...");
      for (size_t i = 1; i < toks.size(); ++i) {
        if (!valid_identifier(toks[i]))
          throw ParseError(lineno, "invalid object name '" + toks[i] + "'");
        p.objects.push_back(toks[i]);
      }
    } else if (kw == "arrow") {
      // arrow f : A -> B
      if (toks.size() != 6 || toks[2] != ":" || toks[4] != "->")
        throw ParseError(lineno, "expected: arrow <name> : <src> -> <tgt>");
      if (!valid_identifier(toks[1]) || !valid_identifier(toks[3]) || !valid_identifier(toks[5]))
        throw ParseError(lineno, "invalid identifier in arrow declaration");
      p.generators.push_back({toks[1], toks[3], toks[5]});
    } else if (kw == "relation") {
      std::string rest = line.substr(line.find("relation") + 8);
      auto eq = rest.find('=');
      if (eq == std::string::npos) throw ParseError(lineno, "relation needs '='");
      PathRelation r;
      r.lhs = parse_path(rest.substr(0, eq), lineno);
      r.rhs = parse_path(rest.substr(eq + 1), lineno);
      r.line = lineno;
      p.relations.push_back(std::move(r));
    } else {
      throw ParseError(lineno, "unknown directive '" + kw + "'");
    }
  }
  try {
    p.validate();
  } catch (const ValidationError& e) {
    throw ParseError(std::string(e.what()));
  }
  return p;
}

std::string resolve_path(const FiniteCategory& c, const std::vector<std::string>& path_in_order) {
  if (path_in_order.empty()) throw Error("empty path");
  int cur = c.morphism_index(path_in_order[0]);
  if (cur < 0) throw Error("unknown morphism '" + path_in_order[0] + "' in path");
  for (size_t i = 1; i < path_in_order.size(); ++i) {
    int next = c.morphism_index(path_in_order[i]);
    if (next < 0) throw Error("unknown morphism '" + path_in_order[i] + "' in path");
    auto comp = c.try_compose(next, cur);
    if (!comp) throw Error("path not composable at '" + path_in_order[i] + "'");
    cur = *comp;
  }
  return c.morphism(cur).id;
}

NamedFunctor parse_functor_file(const std::string& text,
                                const std::function<CatPtr(const std::string&)>& resolve) {
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  NamedFunctor nf;
  CatPtr src, tgt;
  std::unordered_map<std::string, std::string> omap, gmap;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = strip_comment(raw);
    std::vector<std::string> toks = tokenize(line);
    if (toks.empty()) continue;
    const std::string& kw = toks[0];
    if (kw == "functor") {
      // functor F : A -> B
      if (toks.size() != 6 || toks[2] != ":" || toks[4] != "->")
        throw ParseError(lineno, "expected: functor <name> : <catA> -> <catB>");
      nf.name = toks[1];
      src = resolve(toks[3]);
      tgt = resolve(toks[5]);
      if (!src) throw ParseError(lineno, "cannot resolve source category '" + toks[3] + "'");
      if (!tgt) throw ParseError(lineno, "cannot resolve target category '" + toks[5] + "'");
    } else if (kw == "object") {
      if (toks.size() != 4 || toks[2] != "->")
        throw ParseError(lineno, "expected: object <x> -> <y>");
      omap[toks[1]] = toks[3];
    } else if (kw == "arrow") {
      if (toks.size() < 4 || toks[2] != "->")
        throw ParseError(lineno, "expected: arrow <f> -> <path | id <obj>>");
      if (!tgt) throw ParseError(lineno, "arrow line before functor header");
      if (toks[3] == "id") {
        if (toks.size() != 5) throw ParseError(lineno, "expected: arrow <f> -> id <obj>");
        if (!tgt->has_object(toks[4]))
          throw ParseError(lineno, "unknown object '" + toks[4] + "' in target");
        gmap[toks[1]] = tgt->identity_id(toks[4]);
      } else {
        std::string rest;
        for (size_t i = 3; i < toks.size(); ++i) rest += toks[i];
        std::vector<std::string> path = parse_path(rest, lineno);
        try {
          gmap[toks[1]] = resolve_path(*tgt, path);
        } catch (const Error& e) {
          throw ParseError(lineno, e.what());
        }
      }
    } else {
      throw ParseError(lineno, "unknown directive '" + kw + "'");
    }
  }
  if (!src || !tgt) throw ParseError("functor file missing 'functor' header");
  try {
    nf.functor = functor_from_generators(src, tgt, omap, gmap);
  } catch (const Error& e) {
    throw ParseError(std::string("functor file: ") + e.what());
  }
  CheckResult r = check_functor(nf.functor);
  if (!r) throw ParseError("functor file: not a functor: " + r.witness);
  return nf;
}

}  // namespace acat
