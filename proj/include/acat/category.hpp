#pragma once

#include <array>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace acat {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input-side problems: bad grammar, unknown names, ill-typed data.
struct ParseError : Error {
  int line = 0;
  ParseError(int line_, const std::string& msg)
      : Error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
  explicit ParseError(const std::string& msg) : Error(msg) {}
};

// A constructed value violates a structural invariant.
struct ValidationError : Error {
  using Error::Error;
};

inline std::string identity_name(const std::string& obj) { return "id:" + obj; }

struct Morphism {
  std::string id, src, tgt;
  bool operator==(const Morphism&) const = default;
};

// A finite category given by complete tables: objects, morphisms (including
// identities), an identity per object and a composition table defined exactly
// on composable pairs.  Immutable after construction; all queries are const.
class FiniteCategory {
 public:
  FiniteCategory() = default;
  FiniteCategory(std::vector<std::string> objects, std::vector<Morphism> morphisms,
                 std::vector<int> identity_by_object, std::vector<int> compose_table);

  int object_count() const { return static_cast<int>(objects_.size()); }
  int morphism_count() const { return static_cast<int>(morphisms_.size()); }
  const std::vector<std::string>& objects() const { return objects_; }
  const std::vector<Morphism>& morphisms() const { return morphisms_; }
  const Morphism& morphism(int i) const { return morphisms_.at(i); }

  int object_index(const std::string& name) const;
  int morphism_index(const std::string& id) const;
  bool has_object(const std::string& name) const { return object_index(name) >= 0; }
  bool has_morphism(const std::string& id) const { return morphism_index(id) >= 0; }

  int identity_of(int obj) const { return identity_.at(obj); }
  const std::string& identity_id(const std::string& obj) const;
  bool is_identity(int mor) const;

  // compose(g, f) = g after f; throws unless tgt(f) == src(g)
  int compose(int g, int f) const;
  std::optional<int> try_compose(int g, int f) const;
  const std::string& compose_ids(const std::string& g, const std::string& f) const;

  std::vector<int> hom(int src, int tgt) const;
  std::vector<int> hom(const std::string& src, const std::string& tgt) const;

  void validate() const;  // category axioms, throws ValidationError with witness

  bool operator==(const FiniteCategory& other) const;

 private:
  std::vector<std::string> objects_;
  std::vector<Morphism> morphisms_;
  std::vector<int> identity_;  // object index -> morphism index
  std::vector<int> compose_;   // compose_[g * m + f], -1 when undefined
  std::unordered_map<std::string, int> obj_index_, mor_index_;

  void rebuild_indices();
};

using CatPtr = std::shared_ptr<const FiniteCategory>;

// Incremental construction.  Identities and unit-law compositions are filled
// in automatically; the caller supplies every other composable pair.
class CategoryBuilder {
 public:
  void add_object(const std::string& name);
  void add_morphism(const std::string& id, const std::string& src, const std::string& tgt);
  void set_compose(const std::string& g, const std::string& f, const std::string& gf);
  bool has_object(const std::string& name) const { return objects_set_.count(name) > 0; }
  bool has_morphism(const std::string& id) const { return morphisms_set_.count(id) > 0; }
  FiniteCategory build() const;
  CatPtr build_ptr() const { return std::make_shared<FiniteCategory>(build()); }

 private:
  std::vector<std::string> objects_;
  std::vector<Morphism> morphisms_;
  std::vector<std::array<std::string, 3>> compositions_;
  std::unordered_map<std::string, int> objects_set_, morphisms_set_;
};

// Structural checks
bool is_skeletal(const FiniteCategory& c);
bool is_progressive(const FiniteCategory& c);
bool is_acyclic(const FiniteCategory& c);
// Nonempty description of an offending isomorphism/endomorphism, if any.
std::optional<std::string> acyclicity_witness(const FiniteCategory& c);

// The total order 0 -> 1 -> ... -> n; morphisms named m<i>_<j>.
FiniteCategory ordinal(int n);
CatPtr ordinal_ptr(int n);

// Next unused name: appends ' until fresh.
std::string unique_name(std::string base, const std::unordered_map<std::string, int>& taken);

}  // namespace acat
