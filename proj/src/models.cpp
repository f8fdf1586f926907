#include "acat/models.hpp"

#include <algorithm>

namespace acat {

namespace {

const char* kSourceS = R"(# parallel pair: two arrows between two objects
category S
objects A B
arrow f : A -> B
arrow g : A -> B
)";

const char* kSourceD = R"(# disk: parallel pair coequalized by t
category D
objects A B X
arrow f : A -> B
arrow g : A -> B
arrow t : B -> X
relation t.f = t.g
)";

// Torus on six objects.  The square grid has corners A_0, edge midpoints
// B_0 (horizontal), A_1 (vertical), B_2 (diagonal), and the two triangular
// halves carry the hubs B_1 and B_3; each hub is fanned by six triangles and
// the fan corners give one commuting square each.
const char* kSourceT = R"(category T
objects A_0 A_1 B_0 B_1 B_2 B_3
arrow f_0 : A_0 -> B_0
arrow g_0 : A_0 -> B_0
arrow p_A : A_0 -> A_1
arrow q_A : A_0 -> A_1
arrow f_2 : A_0 -> B_2
arrow g_2 : A_0 -> B_2
arrow p_B1 : B_0 -> B_1
arrow q_B1 : B_2 -> B_1
arrow g_1 : A_1 -> B_1
arrow f_3 : A_1 -> B_3
arrow p_B3 : B_2 -> B_3
arrow q_B3 : B_0 -> B_3
relation p_B1.f_0 = q_B1.f_2
relation p_B1.g_0 = g_1.p_A
relation g_1.q_A = q_B1.g_2
relation f_3.p_A = p_B3.f_2
relation f_3.q_A = q_B3.f_0
relation q_B3.g_0 = p_B3.g_2
)";

CatPtr realize_ptr(const char* text) { return realize_category(parse_presentation(text)).ptr; }

Functor make_inclSD(const CatPtr& S, const CatPtr& D) {
  return functor_from_generators(S, D, {{"A", "A"}, {"B", "B"}}, {{"f", "f"}, {"g", "g"}});
}

}  // namespace

HopfModels build_hopf_models(const std::optional<Functor>& fm_override) {
  HopfModels m;
  m.S = realize_ptr(kSourceS);
  m.D = realize_ptr(kSourceD);
  m.T = realize_ptr(kSourceT);

  const std::string idA = m.S->identity_id("A");
  const std::string idB = m.S->identity_id("B");

  // vertical projection: p-arrows to g, q-arrows to f, horizontals collapse
  m.FM = functor_from_generators(
      m.T, m.S,
      {{"A_0", "A"}, {"B_0", "A"}, {"A_1", "B"}, {"B_1", "B"}, {"B_2", "B"}, {"B_3", "B"}},
      {{"f_0", idA}, {"g_0", idA}, {"f_3", idB}, {"p_B3", idB}, {"q_B1", idB}, {"g_1", idB},
       {"q_A", "f"}, {"q_B3", "f"}, {"p_A", "g"}, {"p_B1", "g"}, {"f_2", "g"}, {"g_2", "f"}});
  if (fm_override) m.FM = *fm_override;

  // horizontal projection: f-arrows to f, g-arrows to g, verticals collapse
  m.FN = functor_from_generators(
      m.T, m.S,
      {{"A_0", "A"}, {"A_1", "A"}, {"B_0", "B"}, {"B_1", "B"}, {"B_2", "B"}, {"B_3", "B"}},
      {{"p_A", idA}, {"q_A", idA}, {"p_B1", idB}, {"p_B3", idB}, {"q_B1", idB}, {"q_B3", idB},
       {"f_0", "f"}, {"f_2", "f"}, {"f_3", "f"}, {"g_0", "g"}, {"g_1", "g"}, {"g_2", "g"}});

  // diagonal projection
  m.G = functor_from_generators(
      m.T, m.S,
      {{"A_0", "A"}, {"B_2", "A"}, {"A_1", "B"}, {"B_0", "B"}, {"B_1", "B"}, {"B_3", "B"}},
      {{"f_3", idB}, {"q_B3", idB}, {"f_2", idA}, {"g_2", idA}, {"p_B1", idB}, {"g_1", idB},
       {"q_A", "f"}, {"f_0", "f"}, {"q_B1", "f"}, {"p_A", "g"}, {"p_B3", "g"}, {"g_0", "g"}});

  m.cylM = mapping_cylinder(m.FM);
  m.cylN = mapping_cylinder(m.FN);
  m.inclSD = make_inclSD(m.S, m.D);

  // collapse S onto the cone point of D; the seam components are forced
  Functor K = functor_from_generators(
      m.S, m.D, {{"A", "X"}, {"B", "X"}},
      {{"f", m.D->identity_id("X")}, {"g", m.D->identity_id("X")}});
  Functor H_T = compose_functors(m.inclSD, m.G);
  auto seam_for = [&](const Functor& base) {
    NaturalTransformation r;
    r.source = H_T;
    r.target = compose_functors(K, base);
    for (const std::string& x : m.T->objects())
      r.components[x] = m.G.obj(x) == "A" ? "t.f" : "t";
    return r;
  };
  m.HM = cylinder_factorize(m.cylM, H_T, K, seam_for(m.FM));
  m.HN = cylinder_factorize(m.cylN, H_T, K, seam_for(m.FN));

  CatSquare left{m.cylM.include_source, m.G, m.HM, m.inclSD};
  CatSquare right{m.cylN.include_source, m.G, m.HN, m.inclSD};
  m.hopf = arrow_pushout(left, right, "M", "N", "D1", "D2");

  m.coneP = cone(m.hopf.domain.apex);
  m.R = cone_pushout(m.coneP, m.hopf.mediating);

  CatPtr pt = ordinal_ptr(0);
  CatPtr interval = ordinal_ptr(1);
  m.counterexample = functor_from_generators(pt, interval, {{"0", "0"}}, {});
  return m;
}

const HopfModels& hopf_models() {
  static const HopfModels models = build_hopf_models(std::nullopt);
  return models;
}

std::vector<std::string> model_names() {
  return {"S", "D", "T", "M", "N", "P", "Q", "R", "cone_P",
          "F_M", "F_N", "G", "H_M", "H_N", "H", "counterexample"};
}

bool is_model_name(const std::string& name) {
  auto names = model_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

ModelValue build_model(const std::string& name) {
  const HopfModels& m = hopf_models();
  if (name == "S") return m.S;
  if (name == "D") return m.D;
  if (name == "T") return m.T;
  if (name == "M") return m.cylM.cylinder;
  if (name == "N") return m.cylN.cylinder;
  if (name == "P") return m.hopf.domain.apex;
  if (name == "Q") return m.hopf.codomain.apex;
  if (name == "R") return m.R.apex;
  if (name == "cone_P") return m.coneP.cylinder;
  if (name == "F_M") return m.FM;
  if (name == "F_N") return m.FN;
  if (name == "G") return m.G;
  if (name == "H_M") return m.HM;
  if (name == "H_N") return m.HN;
  if (name == "H") return m.hopf.mediating;
  if (name == "counterexample") return m.counterexample;
  throw Error("unknown model '" + name + "'");
}

}  // namespace acat
