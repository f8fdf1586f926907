#pragma once

#include <functional>
#include <string>
#include <vector>

#include "acat/functor.hpp"

namespace acat {

struct GeneratorDecl {
  std::string name, src, tgt;
};

// Both sides stored in application order: path[0] acts first.
struct PathRelation {
  std::vector<std::string> lhs, rhs;
  int line = 0;
};

struct CatPresentation {
  std::string name;
  std::vector<std::string> objects;
  std::vector<GeneratorDecl> generators;
  std::vector<PathRelation> relations;

  void validate() const;  // structural checks; throws ParseError/ValidationError
  int generator_index(const std::string& name) const;
};

// Line-oriented grammar:
//   category <name>
//   objects <id> <id> ...
//   arrow <name> : <src> -> <tgt>
//   relation <path> = <path>        with <path> = gN . ... . g1 (g1 acts first)
// '#' starts a comment.
CatPresentation parse_presentation(const std::string& text);

// Functor file grammar:
//   functor <name> : <catA> -> <catB>
//   object <x> -> <y>
//   arrow <f> -> <path>  |  arrow <f> -> id <obj>
// Category names are resolved through the supplied callback.  Entries may be
// given on generators only; images of composites are derived by closure.
struct NamedFunctor {
  std::string name;
  Functor functor;
};
NamedFunctor parse_functor_file(const std::string& text,
                                const std::function<CatPtr(const std::string&)>& resolve);

// Resolve a '.'-separated path (target-side first) to a morphism id.
std::string resolve_path(const FiniteCategory& c, const std::vector<std::string>& path_in_order);

}  // namespace acat
