#include <cctype>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "schurlab/io.hpp"
#include "schurlab/numtheory.hpp"
#include "schurlab/recipes.hpp"

using namespace schurlab;
using io::Json;

namespace {

constexpr int kOk = 0;
constexpr int kUndecided = 20;
constexpr int kUsage = 2;

struct Settings {
  int jobs = 1;
  std::uint64_t node_budget = AutOptions{}.node_budget;
  std::uint64_t enum_budget = 0;
  int cap_atoms = EnumerationOptions{}.cap_atoms;
  int cap_order = EnumerationOptions{}.cap_order;
  std::string out = "schurlab-out";

  SweepOptions sweep() const {
    SweepOptions s;
    s.enumeration.jobs = jobs;
    s.enumeration.node_budget = enum_budget;
    s.enumeration.cap_atoms = cap_atoms;
    s.enumeration.cap_order = cap_order;
    s.aut.node_budget = node_budget;
    return s;
  }

  Json json() const {
    return Json{{"jobs", jobs},           {"node_budget", node_budget}, {"enum_budget", enum_budget},
                {"cap_atoms", cap_atoms}, {"cap_order", cap_order},     {"out", out}};
  }
};

class Stopwatch {
 public:
  double seconds() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count(); }

 private:
  std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

// A file-name friendly form of a group spec.
std::string slug(const std::string& spec) {
  std::string s;
  for (char c : spec) s += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
  return s;
}

std::string labels(const Group& g, const ElementSet& x) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < x.size(); ++i) out << (i ? ", " : "") << g.label(x[i]);
  out << '}';
  return out.str();
}

std::string sizes(const SizeMultiset& s) {
  std::ostringstream out;
  for (std::size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << s[i];
  return out.str();
}

void emit(const Settings& st, const std::string& name, const Json& doc) {
  const auto path = std::filesystem::path(st.out) / name;
  io::write_text(path, doc.dump(2) + "\n");
  std::cout << "wrote " << path.string() << "\n";
}

void emit_text(const Settings& st, const std::string& name, const std::string& text) {
  const auto path = std::filesystem::path(st.out) / name;
  io::write_text(path, text);
  std::cout << "wrote " << path.string() << "\n";
}

int undecided(const Settings& st, const std::string& file, const std::string& spec, const std::string& what,
              const std::string& reason, double seconds) {
  std::cout << spec << ": undecided (" << reason << ")\n";
  emit(st, file, io::envelope("undecided", Json{{"group", spec}, {"command", what}, {"reason", reason}}, st.json(), seconds));
  return kUndecided;
}

// ---------------------------------------------------------------------------

int cmd_group_info(const Settings& st, const std::string& spec) {
  Stopwatch sw;
  auto g = build_group(spec);
  const auto classes = conjugacy_classes(*g);
  const Subgroup z = center(*g);
  const Subgroup phi = frattini(*g);
  // The flag only makes sense for p-groups.
  const bool pgroup = g->order() > 1 && factorize(g->order()).size() == 1;
  const bool maxcyc = pgroup && has_maximal_cyclic_subgroup(*g);

  std::cout << "group " << g->spec() << " of order " << g->order() << (g->is_abelian() ? ", abelian" : ", nonabelian")
            << "\n";
  std::vector<int> class_sizes;
  for (const auto& c : classes) class_sizes.push_back(static_cast<int>(c.size()));
  std::cout << "conjugacy classes (" << classes.size() << "):\n";
  for (const auto& c : classes) std::cout << "  " << c.size() << "  " << labels(*g, c) << "\n";
  std::cout << "center: order " << z.order() << " " << labels(*g, z.elements) << "\n";
  std::cout << "frattini: order " << phi.order() << " " << labels(*g, phi.elements) << "\n";
  std::cout << "maximal cyclic subgroup: " << (!pgroup ? "n/a (not a p-group)" : maxcyc ? "yes" : "no") << "\n";

  Json camina = Json::array();
  for (const auto& h : normal_subgroups(*g)) {
    if (h.order() == 1 || h.order() == g->order() || !is_camina_pair(*g, h)) continue;
    std::cout << "camina pair: H of order " << h.order() << " " << labels(*g, h.elements) << "\n";
    camina.push_back(h.elements);
  }
  if (camina.empty()) std::cout << "camina pairs: none\n";

  Json info{{"group", io::to_json(*g)},
            {"abelian", g->is_abelian()},
            {"classes", classes},
            {"class_sizes", class_sizes},
            {"center", z.elements},
            {"frattini", phi.elements},
            {"maximal_cyclic", pgroup ? Json(maxcyc) : Json(nullptr)},
            {"camina_subgroups", camina}};
  emit(st, slug(spec) + "-info.json", io::envelope("group-info", std::move(info), st.json(), sw.seconds()));
  return kOk;
}

int cmd_enumerate(const Settings& st, const std::string& spec, const std::string& mode) {
  Stopwatch sw;
  auto g = build_group(spec);
  const std::string base = slug(spec) + "-" + mode;
  EnumerationReport rep;
  try {
    rep = mode == "all" ? enumerate_all(g, st.sweep().enumeration) : enumerate_central(g, st.sweep().enumeration);
  } catch (const CapExceeded& e) {
    return undecided(st, base + ".json", spec, "enumerate", e.what(), sw.seconds());
  } catch (const BudgetExhausted& e) {
    return undecided(st, base + ".json", spec, "enumerate", e.what(), sw.seconds());
  }
  std::cout << spec << ": " << rep.rings.size() << " " << mode << " S-rings (" << rep.stats.nodes << " search nodes)\n";
  emit(st, base + ".json", io::envelope("enumeration", io::to_json(rep), st.json(), sw.seconds()));
  emit_text(st, base + ".csv", io::report_csv(rep));
  return kOk;
}

int cmd_check(const Settings& st, const std::string& spec, const std::string& file) {
  Stopwatch sw;
  auto g = build_group(spec);
  const Json doc = io::read_json(file);
  std::vector<SRing> rings;
  const std::string kind = doc.value("kind", "");
  if (kind == "enumeration")
    rings = io::report_from_json(io::payload(doc, kind), g).rings;
  else if (kind == "witness")
    rings.push_back(io::sring_from_json(io::payload(doc, kind).at("sring"), g));
  else
    rings.push_back(io::sring_from_json(io::payload(doc, "sring"), g));

  const std::string base = slug(spec) + "-check";
  Json results = Json::array();
  int open = 0, nonschurian = 0;
  try {
    for (std::size_t i = 0; i < rings.size(); ++i) {
      const auto cert = is_schurian(rings[i], st.sweep().aut);
      if (!verify_certificate(rings[i], cert)) throw Error("certificate failed verification");
      if (cert.verdict == SchurityCertificate::Verdict::Undecided) ++open;
      if (cert.verdict == SchurityCertificate::Verdict::Nonschurian) ++nonschurian;
      std::cout << "[" << i << "] rank " << rings[i].rank() << " sizes " << sizes(rings[i].sizes()) << ": "
                << to_string(cert.verdict) << ", |Aut| = " << to_string(cert.aut_order) << "\n";
      results.push_back(Json{{"index", i}, {"sring", io::to_json(rings[i])}, {"certificate", io::to_json(cert)}});
    }
  } catch (const CapExceeded& e) {
    return undecided(st, base + ".json", spec, "check", e.what(), sw.seconds());
  }
  std::cout << rings.size() << " checked, " << nonschurian << " nonschurian, " << open << " undecided\n";
  emit(st, base + ".json",
       io::envelope("check", Json{{"group", spec}, {"results", std::move(results)}}, st.json(), sw.seconds()));
  return open > 0 ? kUndecided : kOk;
}

int cmd_gschur(const Settings& st, const std::string& spec, const std::string& mode, bool first) {
  Stopwatch sw;
  auto g = build_group(spec);
  SweepOptions opt = st.sweep();
  opt.stop_at_first = first;
  const SchurVerdict v = mode == "all" ? is_schur_group(g, opt) : is_generalized_schur(g, opt);
  const std::string base = slug(spec) + (mode == "all" ? "-schur" : "-gschur");

  std::cout << spec << ": " << (mode == "all" ? "Schur" : "generalized Schur") << " = " << to_string(v.status) << " ("
            << v.report.rings.size() << " " << mode << " S-rings";
  if (!v.nonschurian.empty()) std::cout << ", " << v.nonschurian.size() << " nonschurian";
  std::cout << ")" << (v.note.empty() ? "" : "; " + v.note) << "\n";

  emit(st, base + ".json", io::envelope("verdict", io::to_json(v), st.json(), sw.seconds()));
  if (!v.report.rings.empty()) emit_text(st, base + ".csv", io::report_csv(v.report));
  if (!v.nonschurian.empty()) {
    const int i = v.nonschurian.front();
    Json witness{{"group", spec},
                 {"index", i},
                 {"sring", io::to_json(v.report.rings[i])},
                 {"certificate", io::to_json(v.certificates[i])}};
    emit(st, base + "-witness.json", io::envelope("witness", std::move(witness), st.json(), sw.seconds()));
  }
  return v.status == SchurVerdict::Status::Undecided ? kUndecided : kOk;
}

Json to_json(const RecipeResult& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(Json{{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
  return Json{{"recipe", r.recipe},
              {"overall", to_string(r.overall())},
              {"passed", r.count(CheckStatus::Pass)},
              {"failed", r.count(CheckStatus::Fail)},
              {"undecided", r.count(CheckStatus::Undecided)},
              {"seconds", r.seconds},
              {"checks", std::move(checks)}};
}

int cmd_verify(const Settings& st, const std::string& recipe) {
  Stopwatch sw;
  RecipeOptions opt;
  opt.sweep = st.sweep();
  const std::vector<std::string> names = recipe == "all" ? recipe_names() : std::vector<std::string>{recipe};
  Json results = Json::array();
  CheckStatus overall = CheckStatus::Pass;
  for (const auto& name : names) {
    const RecipeResult r = run_recipe(name, opt);
    for (const auto& c : r.checks)
      std::cout << to_string(c.status) << "  " << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
    std::cout << "== " << name << ": " << to_string(r.overall()) << " (" << r.count(CheckStatus::Pass) << " passed, "
              << r.count(CheckStatus::Fail) << " failed, " << r.count(CheckStatus::Undecided) << " undecided, "
              << r.seconds << " s)\n";
    if (r.overall() == CheckStatus::Fail || (r.overall() == CheckStatus::Undecided && overall == CheckStatus::Pass))
      overall = r.overall();
    results.push_back(to_json(r));
  }
  emit(st, "verify-" + recipe + ".json",
       io::envelope("verification", Json{{"overall", to_string(overall)}, {"recipes", std::move(results)}}, st.json(),
                    sw.seconds()));
  return exit_code(overall);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schur rings over finite groups: enumeration, schurity and verification recipes", "schurlab"};
  app.set_version_flag("--version", io::version());
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "key=value file with any of the long options below");
  app.allow_config_extras(false);

  Settings st;
  app.add_option("-j,--jobs", st.jobs, "worker threads")->envname("SCHURLAB_JOBS")->check(CLI::PositiveNumber);
  app.add_option("--node-budget", st.node_budget, "search nodes per automorphism computation (0 = unlimited)");
  app.add_option("--enum-budget", st.enum_budget, "search nodes per enumeration (0 = unlimited)");
  app.add_option("--cap-atoms", st.cap_atoms, "most search units per enumeration")->check(CLI::PositiveNumber);
  app.add_option("--cap-order", st.cap_order, "largest group order for --mode all")->check(CLI::PositiveNumber);
  app.add_option("-o,--out", st.out, "output directory");

  std::string spec, action, mode = "central", file, recipe;
  bool first = false;

  auto* group = app.add_subcommand("group", "group information");
  group->add_option("spec", spec, "group spec (see docs/group-specs.md)")->required();
  group->add_option("action", action, "info")->required()->check(CLI::IsMember({"info"}));

  auto* enumerate = app.add_subcommand("enumerate", "enumerate S-rings");
  enumerate->add_option("spec", spec)->required();
  enumerate->add_option("--mode", mode, "central or all")->check(CLI::IsMember({"central", "all"}));

  auto* check = app.add_subcommand("check", "decide schurity of the S-rings in a file");
  check->add_option("spec", spec)->required();
  check->add_option("file", file, "an sring or enumeration document")->required()->check(CLI::ExistingFile);

  auto* gschur = app.add_subcommand("gschur", "is every central S-ring schurian?");
  gschur->add_option("spec", spec)->required();
  gschur->add_option("--mode", mode, "central (generalized Schur) or all (Schur)")->check(CLI::IsMember({"central", "all"}));
  gschur->add_flag("--first", first, "stop at the first nonschurian S-ring");

  auto* verify = app.add_subcommand("verify", "run a verification recipe");
  std::vector<std::string> choices = recipe_names();
  choices.push_back("all");
  verify->add_option("recipe", recipe)->required()->check(CLI::IsMember(choices));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*group) return cmd_group_info(st, spec);
    if (*enumerate) return cmd_enumerate(st, spec, mode);
    if (*check) return cmd_check(st, spec, file);
    if (*gschur) return cmd_gschur(st, spec, mode, first);
    if (*verify) return cmd_verify(st, recipe);
  } catch (const std::exception& e) {
    std::cerr << "schurlab: " << e.what() << "\n";
    return 1;
  }
  return kUsage;
}
