#include <functional>
#include <sstream>

#include "acat/models.hpp"

namespace acat {

namespace {

std::string betti_string(const std::vector<HomologyGroup>& groups) {
  std::string out = "[";
  for (size_t i = 0; i < groups.size(); ++i) {
    if (i) out += ", ";
    out += group_to_string(groups[i]);
  }
  return out + "]";
}

bool matches_table(const std::vector<HomologyGroup>& groups, const std::vector<long long>& betti,
                   std::string* why) {
  for (size_t n = 0; n < std::max(groups.size(), betti.size()); ++n) {
    long long want = n < betti.size() ? betti[n] : 0;
    long long got = n < groups.size() ? groups[n].betti : 0;
    bool torsion_free = n >= groups.size() || groups[n].torsion.empty();
    if (got != want || !torsion_free) {
      *why = "degree " + std::to_string(n) + ": got " +
             (n < groups.size() ? group_to_string(groups[n]) : std::string("0")) + ", want Z^" +
             std::to_string(want) + " and no torsion";
      return false;
    }
  }
  return true;
}

struct StepRunner {
  VerifyReport report;

  void run(const std::string& name, bool informational,
           const std::function<std::pair<bool, std::string>()>& body) {
    VerifyStep step;
    step.name = name;
    step.informational = informational;
    try {
      auto [ok, detail] = body();
      step.passed = ok;
      step.detail = detail;
    } catch (const std::exception& e) {
      step.passed = false;
      step.detail = std::string("error: ") + e.what();
    }
    report.steps.push_back(std::move(step));
  }

  void finish() {
    report.passed = true;
    for (const VerifyStep& s : report.steps)
      if (!s.informational && !s.passed) report.passed = false;
  }
};

std::pair<bool, std::string> criterion_for(const Functor& f, const std::string& label) {
  auto failure = cylinder_condition_failure(f);
  if (failure)
    return {false, label + ": condition fails at object '" + failure->first + "', morphism '" +
                       failure->second + "'"};
  ComparisonResult cmp = comparison_k(f);
  if (!is_simplicial_iso(cmp.k)) {
    std::string missed;
    for (const auto& dim : cmp.missed)
      for (const std::string& s : dim) missed += (missed.empty() ? "" : ", ") + s;
    return {false, label + ": comparison map is not an isomorphism; missed: " + missed};
  }
  return {true, label + ": condition holds and the comparison map is an isomorphism"};
}

}  // namespace

std::string VerifyReport::to_text() const {
  std::ostringstream out;
  for (const VerifyStep& s : steps) {
    const char* tag = s.informational ? "INFO" : (s.passed ? "PASS" : "FAIL");
    out << "[" << tag << "] " << s.name;
    if (!s.detail.empty()) out << ": " << s.detail;
    out << "\n";
  }
  out << (passed ? "verification passed" : "verification FAILED") << "\n";
  return out.str();
}

VerifyReport verify_hopf_with(const std::optional<Functor>& fm_override) {
  StepRunner r;
  r.report.suite = "hopf";

  std::optional<HopfModels> models;
  r.run("build-models", false, [&]() -> std::pair<bool, std::string> {
    models.emplace(build_hopf_models(fm_override));
    return {true, "all models constructed"};
  });
  if (!models || !r.report.steps.back().passed) {
    r.finish();
    return r.report;
  }
  const HopfModels& m = *models;

  r.run("model-validity", false, [&]() -> std::pair<bool, std::string> {
    std::vector<std::pair<std::string, CatPtr>> cats = {
        {"S", m.S},
        {"D", m.D},
        {"T", m.T},
        {"M", m.cylM.cylinder},
        {"N", m.cylN.cylinder},
        {"P", m.hopf.domain.apex},
        {"Q", m.hopf.codomain.apex},
        {"cone_P", m.coneP.cylinder},
        {"R", m.R.apex}};
    for (const auto& [name, cat] : cats) {
      cat->validate();
      if (auto w = acyclicity_witness(*cat))
        return {false, name + " is not acyclic: " + *w};
    }
    std::vector<std::pair<std::string, const Functor*>> funs = {
        {"F_M", &m.FM}, {"F_N", &m.FN}, {"G", &m.G},
        {"H_M", &m.HM}, {"H_N", &m.HN}, {"H", &m.hopf.mediating},
        {"counterexample", &m.counterexample}};
    for (const auto& [name, f] : funs) {
      CheckResult c = check_functor(*f);
      if (!c) return {false, name + " is not a functor: " + c.witness};
    }
    CheckResult c = check_natural(m.cylM.seam);
    if (!c) return {false, "seam of M: " + c.witness};
    c = check_natural(m.cylN.seam);
    if (!c) return {false, "seam of N: " + c.witness};
    return {true, "9 categories acyclic, 7 functors and 2 seams valid"};
  });

  r.run("cylinder-criterion", false, [&]() -> std::pair<bool, std::string> {
    std::string detail;
    for (const auto& [label, f] :
         std::vector<std::pair<std::string, const Functor*>>{
             {"F_M", &m.FM}, {"F_N", &m.FN}, {"G", &m.G}}) {
      auto [ok, d] = criterion_for(*f, label);
      if (!ok) return {false, d};
      detail += (detail.empty() ? "" : "; ") + d;
    }
    return {true, detail};
  });

  r.run("pushout-preservation", false, [&]() -> std::pair<bool, std::string> {
    PushoutComparison cp = pushout_comparison(m.hopf.domain);
    if (!is_simplicial_iso(cp.mediating))
      return {false, "nerve does not preserve the amalgamation building P"};
    PushoutComparison cq = pushout_comparison(m.hopf.codomain);
    if (!is_simplicial_iso(cq.mediating))
      return {false, "nerve does not preserve the amalgamation building Q"};
    return {true, "both amalgamations are preserved by the nerve"};
  });

  r.run("homology-table", false, [&]() -> std::pair<bool, std::string> {
    std::vector<std::tuple<std::string, CatPtr, std::vector<long long>>> table = {
        {"S", m.S, {1, 1}},
        {"D", m.D, {1}},
        {"T", m.T, {1, 2, 1}},
        {"M", m.cylM.cylinder, {1, 1}},
        {"N", m.cylN.cylinder, {1, 1}},
        {"P", m.hopf.domain.apex, {1, 0, 0, 1}},
        {"Q", m.hopf.codomain.apex, {1, 0, 1}}};
    std::string detail;
    for (const auto& [name, cat, expected] : table) {
      NerveResult nv = nerve(cat);
      auto groups = homology(chain_complex(*nv.complex));
      std::string why;
      if (!matches_table(groups, expected, &why))
        return {false, name + ": " + why};
      detail += (detail.empty() ? "" : "; ") + name + " " + betti_string(groups);
    }
    return {true, detail};
  });

  r.run("counterexample", false, [&]() -> std::pair<bool, std::string> {
    auto failure = cylinder_condition_failure(m.counterexample);
    if (!failure) return {false, "counterexample unexpectedly satisfies the condition"};
    ComparisonResult cmp = comparison_k(m.counterexample);
    if (cmp.surjective()) return {false, "comparison map is unexpectedly surjective"};
    if (cmp.missed.size() < 3 || cmp.missed[2].size() != 1)
      return {false, "expected exactly one missed 2-simplex"};
    const FiniteCategory& mf = *cmp.cylinder.cylinder;
    std::string seam = cmp.cylinder.seam.components.at("0");
    std::string step = cmp.cylinder.include_target.mor("m0_1");
    std::string expected = seam + "|" + step;
    if (cmp.missed[2][0] != expected)
      return {false, "missed 2-simplex is '" + cmp.missed[2][0] + "', expected '" + expected + "'"};
    (void)mf;
    return {true, "condition fails at ('" + failure->first + "', '" + failure->second +
                      "'); the comparison map misses exactly the 2-simplex '" + expected + "'"};
  });

  r.run("hopf-invariant", false, [&]() -> std::pair<bool, std::string> {
    NerveResult np = nerve(m.hopf.domain.apex);
    NerveResult ncone = nerve(m.coneP.cylinder);
    NerveResult nq = nerve(m.hopf.codomain.apex);
    SimplicialMap into_cone = nerve_map(m.coneP.include_source, np, ncone);
    SimplicialMap along_h = nerve_map(m.hopf.mediating, np, nq);
    SimplicialPushout cone_model = simplicial_pushout(into_cone, along_h);
    auto groups = homology(chain_complex(*cone_model.complex));
    std::string why;
    if (!matches_table(groups, {1, 0, 1, 0, 1}, &why))
      return {false, "mapping cone homology: " + why};
    long long h = hopf_invariant(*cone_model.complex);
    if (h != 1 && h != -1)
      return {false, "cup square coefficient is " + std::to_string(h) + ", expected +-1"};
    return {true, "mapping cone has the expected homology and cup square coefficient " +
                      std::to_string(h)};
  });

  r.run("glued-model-comparison", true, [&]() -> std::pair<bool, std::string> {
    PushoutComparison cr = pushout_comparison(m.R);
    NerveResult nr = nerve(m.R.apex);
    auto glued = homology(chain_complex(*nr.complex));
    auto cone_side = homology(chain_complex(*cr.simplicial.complex));
    bool iso = is_simplicial_iso(cr.mediating);
    std::string detail = std::string("mediating map is ") + (iso ? "" : "not ") +
                         "an isomorphism; glued model homology " + betti_string(glued) +
                         ", simplicial mapping cone homology " + betti_string(cone_side);
    return {true, detail};
  });

  r.finish();
  return r.report;
}

VerifyReport verify_hopf() { return verify_hopf_with(std::nullopt); }

VerifyReport verify_cylinder(const Functor& f) {
  StepRunner r;
  r.report.suite = "cylinder";
  r.run("functor-validity", false, [&]() -> std::pair<bool, std::string> {
    CheckResult c = check_functor(f);
    if (!c) return {false, c.witness};
    if (auto w = acyclicity_witness(*f.source)) return {false, "source: " + *w};
    if (auto w = acyclicity_witness(*f.target)) return {false, "target: " + *w};
    return {true, "functor between acyclic categories"};
  });
  if (!r.report.steps.back().passed) {
    r.finish();
    return r.report;
  }
  r.run("cylinder-criterion", false,
        [&]() -> std::pair<bool, std::string> { return criterion_for(f, "functor"); });
  r.finish();
  return r.report;
}

}  // namespace acat
