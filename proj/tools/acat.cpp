// Command-line front end: build the library models, realize presentation
// files, compute nerves, homology and cup products, run verification suites,
// export meshes.  Exit codes: 0 success, 1 verification failure, 2 bad usage
// or unreadable input.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "acat/json_io.hpp"
#include "acat/models.hpp"
#include "acat/off_io.hpp"

using namespace acat;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct InputError : Error {
  using Error::Error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw InputError("cannot write '" + out_path + "'");
  out << text;
}

bool looks_like_json(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{';
  }
  return false;
}

// resolve a category argument: model name, presentation file or category JSON
CatPtr load_category(const std::string& arg) {
  if (is_model_name(arg)) {
    ModelValue v = build_model(arg);
    if (auto* c = std::get_if<CatPtr>(&v)) return *c;
    throw InputError("model '" + arg + "' is a functor, not a category");
  }
  std::string text = slurp(arg);
  if (looks_like_json(text)) {
    Json j = Json::parse(text);
    if (j.value("type", "") == "complex")
      throw InputError("'" + arg + "' is a complex, expected a category");
    return std::make_shared<FiniteCategory>(category_from_json(j));
  }
  return realize_category(parse_presentation(text)).ptr;
}

// resolve a complex argument: anything category-like is passed through nerve
SSetPtr load_complex(const std::string& arg, int max_dim) {
  if (!is_model_name(arg)) {
    std::string text = slurp(arg);
    if (looks_like_json(text)) {
      Json j = Json::parse(text);
      if (j.value("type", "") == "complex") {
        auto x = std::make_shared<SemiSimplicialSet>(complex_from_json(j));
        if (max_dim >= 0 && max_dim < x->top_dim())
          throw InputError("--max-dim truncation applies to categories, not complex files");
        return x;
      }
    }
  }
  CatPtr c = load_category(arg);
  NerveResult nv = nerve(c);
  if (max_dim < 0 || max_dim >= nv.complex->top_dim()) return nv.complex;
  auto trunc = std::make_shared<SemiSimplicialSet>();
  for (int n = 0; n <= max_dim; ++n)
    for (int s = 0; s < nv.complex->count(n); ++s) {
      std::vector<FormalSimplex> faces;
      for (int i = 0; n >= 1 && i <= n; ++i) faces.push_back(nv.complex->face(n, s, i));
      trunc->add_simplex(n, nv.complex->name({n, s}), std::move(faces));
    }
  trunc->validate();
  return trunc;
}

Functor load_functor(const std::string& arg) {
  if (is_model_name(arg)) {
    ModelValue v = build_model(arg);
    if (auto* f = std::get_if<Functor>(&v)) return *f;
    throw InputError("model '" + arg + "' is a category, not a functor");
  }
  std::string text = slurp(arg);
  if (looks_like_json(text)) return functor_from_json(Json::parse(text));
  auto resolve = [](const std::string& name) -> CatPtr {
    if (is_model_name(name)) {
      ModelValue v = build_model(name);
      if (auto* c = std::get_if<CatPtr>(&v)) return *c;
      return nullptr;
    }
    std::string t = slurp(name);
    if (looks_like_json(t))
      return std::make_shared<FiniteCategory>(category_from_json(Json::parse(t)));
    return realize_category(parse_presentation(t)).ptr;
  };
  return parse_functor_file(text, resolve).functor;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite acyclic categories, nerves and integer homology"};
  app.require_subcommand(1);

  std::string out_path, format = "text", input, name, suite;
  int max_dim = -1;
  bool quiet = false;
  app.add_flag("--quiet", quiet, "suppress progress output");

  auto* cmd_build = app.add_subcommand("build", "serialize a built-in model");
  cmd_build->add_option("name", name, "model name")->required();
  cmd_build->add_option("--out", out_path, "output path");

  auto* cmd_realize = app.add_subcommand("realize", "realize a presentation file");
  cmd_realize->add_option("input", input, "presentation file")->required();
  cmd_realize->add_option("--out", out_path, "output path");

  auto* cmd_nerve = app.add_subcommand("nerve", "nerve of a category");
  cmd_nerve->add_option("input", input, "model, presentation or category JSON")->required();
  cmd_nerve->add_option("--max-dim", max_dim, "truncate above this dimension");
  cmd_nerve->add_option("--out", out_path, "output path");

  auto* cmd_homology = app.add_subcommand("homology", "integer homology table");
  cmd_homology->add_option("input", input, "category or complex")->required();
  cmd_homology->add_option("--max-dim", max_dim, "truncate above this dimension");
  cmd_homology->add_option("--format", format, "text | json");
  cmd_homology->add_option("--out", out_path, "output path");

  auto* cmd_cohomology = app.add_subcommand("cohomology", "integer cohomology table");
  cmd_cohomology->add_option("input", input, "category or complex")->required();
  cmd_cohomology->add_option("--max-dim", max_dim, "truncate above this dimension");
  cmd_cohomology->add_option("--format", format, "text | json");
  cmd_cohomology->add_option("--out", out_path, "output path");

  auto* cmd_cup = app.add_subcommand("cup", "cup products of cohomology generators");
  cmd_cup->add_option("input", input, "category or complex")->required();
  cmd_cup->add_option("--format", format, "text | json");
  cmd_cup->add_option("--out", out_path, "output path");

  auto* cmd_verify = app.add_subcommand("verify", "run a verification suite");
  cmd_verify->add_option("--suite", suite, "hopf | cylinder")->required();
  cmd_verify->add_option("input", input, "functor (cylinder suite only)");
  cmd_verify->add_option("--format", format, "text | json");
  cmd_verify->add_option("--out", out_path, "output path");

  auto* cmd_export = app.add_subcommand("export", "export the 2-skeleton");
  cmd_export->add_option("input", input, "category or complex")->required();
  cmd_export->add_option("--format", format, "off")->required();
  cmd_export->add_option("--out", out_path, "output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (cmd_build->parsed()) {
      if (!is_model_name(name)) throw InputError("unknown model '" + name + "'");
      ModelValue v = build_model(name);
      Json j = std::holds_alternative<CatPtr>(v)
                   ? category_to_json(*std::get<CatPtr>(v))
                   : functor_to_json(std::get<Functor>(v), name);
      emit(j.dump(2) + "\n", out_path);
    } else if (cmd_realize->parsed()) {
      CatPtr c = realize_category(parse_presentation(slurp(input))).ptr;
      emit(category_to_json(*c).dump(2) + "\n", out_path);
    } else if (cmd_nerve->parsed()) {
      SSetPtr x = load_complex(input, max_dim);
      emit(complex_to_json(*x).dump(2) + "\n", out_path);
    } else if (cmd_homology->parsed() || cmd_cohomology->parsed()) {
      SSetPtr x = load_complex(input, max_dim);
      ChainComplex cc = chain_complex(*x);
      std::vector<HomologyGroup> groups =
          cmd_homology->parsed() ? homology(cc) : cohomology(cc).groups;
      long long chi = euler_characteristic(*x);
      if (format == "json")
        emit(homology_to_json(groups, chi).dump(2) + "\n", out_path);
      else
        emit(homology_to_text(groups, chi), out_path);
    } else if (cmd_cup->parsed()) {
      SSetPtr x = load_complex(input, -1);
      CupReport rep = cup_report(*x);
      if (format == "json") {
        emit(cup_report_to_json(rep).dump(2) + "\n", out_path);
      } else {
        std::string text;
        for (const HomologyGroup& g : rep.groups)
          text += "H^" + std::to_string(g.degree) + " = " + group_to_string(g) + "\n";
        for (const CupPairing& p : rep.pairings) {
          text += "x" + std::to_string(p.p) + "_" + std::to_string(p.left) + " . x" +
                  std::to_string(p.q) + "_" + std::to_string(p.right) + " = [";
          for (size_t i = 0; i < p.coords.size(); ++i)
            text += (i ? ", " : "") + p.coords[i].str();
          text += "] in degree " + std::to_string(p.p + p.q) + "\n";
        }
        if (rep.hopf) text += "cup square coefficient = " + std::to_string(*rep.hopf) + "\n";
        emit(text, out_path);
      }
    } else if (cmd_verify->parsed()) {
      VerifyReport report;
      if (suite == "hopf") {
        report = verify_hopf();
      } else if (suite == "cylinder") {
        if (input.empty()) throw InputError("the cylinder suite needs a functor argument");
        report = verify_cylinder(load_functor(input));
      } else {
        throw InputError("unknown suite '" + suite + "'");
      }
      if (format == "json") {
        Json j;
        j["type"] = "verify_report";
        j["suite"] = report.suite;
        j["passed"] = report.passed;
        Json steps = Json::array();
        for (const VerifyStep& s : report.steps)
          steps.push_back({{"name", s.name},
                           {"passed", s.passed},
                           {"informational", s.informational},
                           {"detail", s.detail}});
        j["steps"] = steps;
        emit(j.dump(2) + "\n", out_path);
      } else {
        emit(report.to_text(), out_path);
      }
      return report.passed ? kExitOk : kExitVerifyFailed;
    } else if (cmd_export->parsed()) {
      if (format != "off") throw InputError("export supports --format off");
      SSetPtr x = load_complex(input, -1);
      emit(export_off(*x), out_path);
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Json::exception& e) {
    std::cerr << "error: invalid JSON input: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}
