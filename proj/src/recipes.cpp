#include "schurlab/recipes.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

#include "schurlab/numtheory.hpp"

namespace schurlab {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Undecided: return "UNDECIDED";
  }
  return "?";
}

int RecipeResult::count(CheckStatus s) const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(), [&](const CheckOutcome& c) { return c.status == s; }));
}

CheckStatus RecipeResult::overall() const {
  if (count(CheckStatus::Fail) > 0) return CheckStatus::Fail;
  if (count(CheckStatus::Undecided) > 0) return CheckStatus::Undecided;
  return CheckStatus::Pass;
}

int exit_code(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return 0;
    case CheckStatus::Fail: return 10;
    case CheckStatus::Undecided: return 20;
  }
  return 20;
}

std::vector<std::string> catalog(int max_order) {
  static const std::vector<std::string> specs = {
      "cyclic:1", "cyclic:2", "cyclic:3", "cyclic:4", "elemabelian:2^2", "cyclic:5", "cyclic:6", "dihedral:6",
      "cyclic:7", "cyclic:8", "direct(cyclic:4,cyclic:2)", "elemabelian:2^3", "dihedral:8", "quaternion:8",
      "cyclic:9", "elemabelian:3^2", "cyclic:10", "dihedral:10", "cyclic:11", "cyclic:12",
      "direct(cyclic:6,cyclic:2)", "dihedral:12", "A4", "semidirect(cyclic:3,cyclic:4,pow:2)", "cyclic:13",
      "cyclic:14", "dihedral:14", "cyclic:15",
      // Beyond 15: a selection.
      "cyclic:16", "direct(cyclic:8,cyclic:2)", "direct(cyclic:4,cyclic:4)",
      "direct(direct(cyclic:4,cyclic:2),cyclic:2)", "elemabelian:2^4", "dihedral:16", "quaternion:16",
      "semidihedral:16", "modular:16", "direct(dihedral:8,cyclic:2)", "direct(quaternion:8,cyclic:2)",
      "cyclic:18", "dihedral:18", "direct(cyclic:3,dihedral:6)", "frobenius:5:4", "dihedral:20",
      "frobenius:7:3", "dihedral:24", "S4", "direct(cyclic:5,cyclic:5)", "cyclic:27", "direct(cyclic:9,cyclic:3)",
      "elemabelian:3^3", "extraspecial:27:+", "extraspecial:27:-", "modular:27", "cyclic:32",
      "direct(cyclic:16,cyclic:2)", "dihedral:32", "quaternion:32", "semidihedral:32", "modular:32",
      "frobenius:11:5", "A5", "dihedral:72"};
  std::vector<std::pair<int, std::string>> keyed;
  for (const auto& s : specs) {
    const int n = build_group(s)->order();
    if (n <= max_order) keyed.emplace_back(n, s);
  }
  std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::string> out;
  for (auto& [n, s] : keyed) out.push_back(std::move(s));
  return out;
}

bool coprime_condition(const SRing& a) {
  std::size_t largest = 0;
  for (const auto& b : a.blocks()) largest = std::max(largest, b.size());
  for (int i = 1; i < a.rank(); ++i)
    if (std::gcd(largest, a.block(i).size()) == 1) return false;
  return true;
}

namespace {

std::string sizes_string(const SizeMultiset& s) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < s.size(); ++i) out << (i ? "," : "") << s[i];
  out << '}';
  return out.str();
}

CheckOutcome check(std::string name, bool ok, std::string detail = {}) {
  return {std::move(name), ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(detail)};
}

CheckStatus from_verdict(SchurVerdict::Status s, bool expected) {
  if (s == SchurVerdict::Status::Undecided) return CheckStatus::Undecided;
  return (s == SchurVerdict::Status::True) == expected ? CheckStatus::Pass : CheckStatus::Fail;
}

std::string verdict_detail(const SchurVerdict& v) {
  std::ostringstream out;
  out << v.report.rings.size() << " " << to_string(v.report.mode) << " S-rings, verdict " << to_string(v.status);
  if (!v.nonschurian.empty()) {
    const int i = v.nonschurian.front();
    out << ", " << v.nonschurian.size() << " nonschurian; first has rank " << v.report.rings[i].rank() << " sizes "
        << sizes_string(v.report.rings[i].sizes()) << " and |Aut| = " << to_string(v.certificates[i].aut_order);
  }
  if (!v.note.empty()) out << " (" << v.note << ")";
  return out.str();
}

// Runs f, turning caps and budgets into an undecided outcome.
CheckOutcome guarded(const std::string& name, const std::function<CheckOutcome()>& f) {
  try {
    return f();
  } catch (const CapExceeded& e) {
    return {name, CheckStatus::Undecided, e.what()};
  } catch (const BudgetExhausted& e) {
    return {name, CheckStatus::Undecided, e.what()};
  }
}

CheckOutcome gschur_check(const std::string& spec, bool expected, const RecipeOptions& opt, EnumerationMode mode) {
  const std::string name = std::string(mode == EnumerationMode::Central ? "generalized Schur " : "Schur ") + spec +
                           " == " + (expected ? "true" : "false");
  return guarded(name, [&] {
    auto g = build_group(spec);
    const SchurVerdict v = mode == EnumerationMode::Central ? is_generalized_schur(g, opt.sweep) : is_schur_group(g, opt.sweep);
    bool certs_ok = true;
    for (std::size_t i = 0; i < v.certificates.size(); ++i)
      if (!verify_certificate(v.report.rings[i], v.certificates[i])) certs_ok = false;
    CheckOutcome c{name, from_verdict(v.status, expected), verdict_detail(v)};
    if (!certs_ok) {
      c.status = CheckStatus::Fail;
      c.detail += "; a certificate failed verification";
    }
    return c;
  });
}

// ---------------------------------------------------------------------------

void example1(RecipeResult& r, const RecipeOptions& opt) {
  auto g = build_group("A5");
  EnumerationReport rep = enumerate_central(g, opt.sweep.enumeration);
  r.checks.push_back(check("A5 class sizes are 1,12,12,15,20", [&] {
    std::vector<int> s;
    for (const auto& c : conjugacy_classes(*g)) s.push_back(static_cast<int>(c.size()));
    std::sort(s.begin(), s.end());
    return s == std::vector<int>{1, 12, 12, 15, 20};
  }()));
  std::set<int> ranks;
  for (const auto& a : rep.rings) ranks.insert(a.rank());
  std::ostringstream rk;
  for (int x : ranks) rk << x << ' ';
  r.checks.push_back(check("member ranks lie in {2,3,4,5}",
                           std::all_of(ranks.begin(), ranks.end(), [](int x) { return x >= 2 && x <= 5; }),
                           std::to_string(rep.rings.size()) + " central S-rings; ranks " + rk.str()));

  std::vector<const SRing*> rank4;
  for (const auto& a : rep.rings)
    if (a.rank() == 4) rank4.push_back(&a);
  r.checks.push_back(check("exactly one rank-4 member, with sizes {1,15,20,24}",
                           rank4.size() == 1 && rank4.front()->sizes() == SizeMultiset{1, 15, 20, 24},
                           std::to_string(rank4.size()) + " rank-4 members"));
  const SRing cyc = cyclotomic(g, automorphism_group(*g));
  r.checks.push_back(check("the rank-4 member is cyc(Aut(A5), A5)", rank4.size() == 1 && rank4.front()->same_partition(cyc)));

  const std::vector<SizeMultiset> excluded = {{1, 12, 47}, {1, 15, 44}, {1, 20, 39},
                                              {1, 12, 12, 35}, {1, 12, 20, 27}, {1, 12, 15, 32}};
  for (const auto& s : excluded) {
    const bool absent = std::none_of(rep.rings.begin(), rep.rings.end(), [&](const SRing& a) { return a.sizes() == s; });
    // The excluded multisets also violate the gcd condition.
    bool coprime_fails = false;
    for (std::size_t i = 1; i < s.size(); ++i)
      if (std::gcd(s.back(), s[i]) == 1) coprime_fails = true;
    r.checks.push_back(check("no member with sizes " + sizes_string(s), absent && coprime_fails));
  }
  bool coprime = true;
  for (const auto& a : rep.rings)
    if (is_primitive(a) && !coprime_condition(a)) coprime = false;
  r.checks.push_back(check("gcd condition holds on every primitive member", coprime));
  r.checks.push_back(guarded("every member is schurian", [&] {
    const SchurVerdict v = check_report(rep, opt.sweep);
    return CheckOutcome{"every member is schurian", from_verdict(v.status, true), verdict_detail(v)};
  }));
}

void thm1_positive(RecipeResult& r, const RecipeOptions& opt) {
  const std::vector<std::string> groups = {
      "cyclic:2", "cyclic:4", "cyclic:8", "cyclic:16", "cyclic:32", "elemabelian:2^2",
      "direct(cyclic:4,cyclic:2)", "direct(cyclic:8,cyclic:2)", "direct(cyclic:16,cyclic:2)", "dihedral:8",
      "dihedral:16", "dihedral:32", "quaternion:8", "quaternion:16", "quaternion:32", "semidihedral:16",
      "semidihedral:32", "modular:16", "modular:32", "cyclic:3", "cyclic:9", "cyclic:27", "elemabelian:3^2",
      "direct(cyclic:9,cyclic:3)", "modular:27", "extraspecial:27:-"};
  for (const auto& s : groups) {
    const bool mc = has_maximal_cyclic_subgroup(*build_group(s));
    r.checks.push_back(check(s + " has a maximal cyclic subgroup", mc));
    r.checks.push_back(gschur_check(s, true, opt, EnumerationMode::Central));
  }
}

void thm1_negative(RecipeResult& r, const RecipeOptions& opt) {
  // A noncyclic p-group with p >= 5 is not generalized Schur; for abelian
  // groups every S-ring is central.
  r.checks.push_back(gschur_check("direct(cyclic:5,cyclic:5)", false, opt, EnumerationMode::All));
  r.checks.push_back(gschur_check("elemabelian:2^2", true, opt, EnumerationMode::All));
  r.checks.push_back(gschur_check("elemabelian:3^2", true, opt, EnumerationMode::All));
  r.checks.push_back(gschur_check("cyclic:25", true, opt, EnumerationMode::All));
}

void thm2_camina(RecipeResult& r, const RecipeOptions& opt) {
  const std::vector<std::string> groups = {"dihedral:6",    "dihedral:10",       "A4",
                                           "quaternion:8",  "dihedral:8",        "frobenius:5:4",
                                           "frobenius:7:3", "extraspecial:27:+", "extraspecial:27:-",
                                           "frobenius:11:5"};
  for (const auto& s : groups) {
    auto g = build_group(s);
    std::vector<Subgroup> pairs;
    for (const auto& h : normal_subgroups(*g))
      if (h.order() > 1 && h.order() < g->order() && is_camina_pair(*g, h)) pairs.push_back(h);
    r.checks.push_back(check(s + " has a Camina pair", !pairs.empty(), std::to_string(pairs.size()) + " Camina subgroups"));
    r.checks.push_back(guarded(s + ": every central S-ring splits as (A_L wr T_U/L) wr A_G/U", [&] {
      const auto rep = enumerate_central(g, opt.sweep.enumeration);
      int ok = 0, bad = 0;
      std::string first_bad;
      for (const auto& a : rep.rings)
        for (const auto& h : pairs) {
          try {
            const auto d = camina_decomposition(a, h);
            const bool exact = double_wreath(a, d.lower, d.upper).same_partition(a) && is_subset(d.lower.elements, h.elements) &&
                               is_subset(h.elements, d.upper.elements);
            exact ? ++ok : ++bad;
          } catch (const Error& e) {
            ++bad;
            if (first_bad.empty()) first_bad = e.what();
          }
        }
      return check(s + ": every central S-ring splits as (A_L wr T_U/L) wr A_G/U", bad == 0,
                   std::to_string(ok) + " decompositions, " + std::to_string(bad) + " failures" +
                       (first_bad.empty() ? "" : " (" + first_bad + ")"));
    }));
    r.checks.push_back(gschur_check(s, true, opt, EnumerationMode::Central));
  }
  // Order pq with q = 1 mod p.
  for (const char* s : {"dihedral:6", "dihedral:10", "frobenius:7:3", "frobenius:11:5"})
    r.checks.push_back(check(std::string(s) + " is nonabelian of order pq", [&] {
      auto g = build_group(s);
      return !g->is_abelian() && factorize(g->order()).size() == 2;
    }()));
}

void thm3_dihedral(RecipeResult& r, const RecipeOptions& opt) {
  for (int n = 3; n <= 16; ++n) {
    const std::string s = "dihedral:" + std::to_string(2 * n);
    r.checks.push_back(gschur_check(s, cyclic_schur_family(n), opt, EnumerationMode::Central));
    r.checks.push_back(guarded(s + ": every central S-ring falls in a branch", [&] {
      const auto rep = enumerate_central(build_group(s), opt.sweep.enumeration);
      std::map<std::string, int> branches;
      int unclassified = 0;
      std::string first;
      for (const auto& a : rep.rings) {
        try {
          ++branches[to_string(dihedral_structure(a).branch)];
        } catch (const Error&) {
          if (unclassified++ == 0) first = sizes_string(a.sizes());
        }
      }
      std::ostringstream d;
      for (const auto& [b, k] : branches) d << b << "=" << k << " ";
      d << "unclassified=" << unclassified;
      if (unclassified) d << ", first with sizes " << first;
      return check(s + ": every central S-ring falls in a branch", unclassified == 0, d.str());
    }));
  }
  // Members outside the three branches occur for n = 6, 10, 12, 14 (tensor
  // shapes such as T_{<a^3>} x T_{S3} over D12). Their schurity is checked
  // separately so the classification gap does not hide a wrong verdict.
  r.checks.push_back(guarded("unclassified dihedral members are schurian", [&] {
    int seen = 0, bad = 0;
    for (int n = 3; n <= 16; ++n)
      for (const auto& a : enumerate_central(build_group("dihedral:" + std::to_string(2 * n)), opt.sweep.enumeration).rings) {
        try {
          dihedral_structure(a);
          continue;
        } catch (const Error&) {
        }
        ++seen;
        const auto c = is_schurian(a, opt.sweep.aut);
        if (c.verdict != SchurityCertificate::Verdict::Schurian || !verify_certificate(a, c)) ++bad;
      }
    return check("unclassified dihedral members are schurian", bad == 0,
                 std::to_string(seen) + " unclassified members, " + std::to_string(bad) + " not schurian");
  }));
  // 36 = 2 * 2 * 3^2 has the shape 2pq^k.
  r.checks.push_back(gschur_check("dihedral:72", cyclic_schur_family(36), opt, EnumerationMode::Central));
}

void small_schur(RecipeResult& r, const RecipeOptions& opt) {
  for (const auto& s : catalog(15)) r.checks.push_back(gschur_check(s, true, opt, EnumerationMode::All));
}

void lemma_suite(RecipeResult& r, const RecipeOptions& opt) {
  int rings = 0, normal_bad = 0, burn_bad = 0, separation_bad = 0, coprime_bad = 0, separation_cases = 0;
  std::set<std::string> seen_primitive;
  for (const auto& s : catalog(32)) {
    auto g = build_group(s);
    const auto rep = enumerate_central(g, opt.sweep.enumeration);
    const auto subgroups = g->order() <= kSubgroupSearchCap ? all_subgroups(*g) : std::vector<Subgroup>{};
    for (const auto& a : rep.rings) {
      ++rings;
      for (const auto& h : a_subgroups(a))
        if (!is_normal(*g, h)) ++normal_bad;
      if (!verify_power_closure(a)) ++burn_bad;
      if (is_primitive(a) && !is_prime(g->order()) && !coprime_condition(a)) ++coprime_bad;
      if (rep.rings.size() <= 500)
        for (int b = 1; b < a.rank(); ++b)
          for (const auto& h : subgroups) {
            const auto v = separation_check(a, b, h);
            if (v.status == SeparationVerdict::Status::NotApplicable) continue;
            ++separation_cases;
            if (v.status == SeparationVerdict::Status::Fail) ++separation_bad;
          }
    }
  }
  const std::string scope = std::to_string(rings) + " central S-rings over the catalog up to order 32";
  r.checks.push_back(check("A-subgroups of central S-rings are normal", normal_bad == 0, scope));
  r.checks.push_back(check("central S-rings are closed under coprime powers", burn_bad == 0, scope));
  r.checks.push_back(check("separation lemma", separation_bad == 0,
                           std::to_string(separation_cases) + " applicable (set, subgroup) pairs, " +
                               std::to_string(separation_bad) + " violations"));
  r.checks.push_back(check("gcd condition on primitive members", coprime_bad == 0, scope));

  // Dihedral lemma: three branches, and rank 3 is schurian.
  for (const char* s : {"dihedral:12", "dihedral:16", "dihedral:24", "dihedral:32"}) {
    const auto rep = enumerate_central(build_group(s), opt.sweep.enumeration);
    int unclassified = 0, rank3_bad = 0;
    for (const auto& a : rep.rings) {
      try {
        dihedral_structure(a);
      } catch (const Error&) {
        ++unclassified;
      }
      if (a.rank() == 3 && is_schurian(a, opt.sweep.aut).verdict != SchurityCertificate::Verdict::Schurian) ++rank3_bad;
    }
    r.checks.push_back(check(std::string(s) + ": dihedral branches cover every central S-ring", unclassified == 0,
                             std::to_string(unclassified) + " of " + std::to_string(rep.rings.size()) + " unclassified"));
    r.checks.push_back(check(std::string(s) + ": rank-3 central S-rings are schurian", rank3_bad == 0));
  }

  // Camina decompositions over the nonabelian groups of the catalog.
  int camina_cases = 0, camina_bad = 0;
  for (const auto& s : catalog(32)) {
    auto g = build_group(s);
    if (g->is_abelian()) continue;
    for (const auto& h : normal_subgroups(*g)) {
      if (h.order() == 1 || h.order() == g->order() || !is_camina_pair(*g, h)) continue;
      for (const auto& a : enumerate_central(g, opt.sweep.enumeration).rings) {
        ++camina_cases;
        try {
          const auto d = camina_decomposition(a, h);
          if (!double_wreath(a, d.lower, d.upper).same_partition(a)) ++camina_bad;
        } catch (const Error&) {
          ++camina_bad;
        }
      }
    }
  }
  r.checks.push_back(check("Camina decomposition reconstructs every central S-ring", camina_bad == 0,
                           std::to_string(camina_cases) + " (S-ring, Camina subgroup) pairs"));

  // A = A_H wr A_{G/H} is schurian iff both factors are.
  const auto schurian = [&](const SRing& a) { return is_schurian(a, opt.sweep.aut).verdict == SchurityCertificate::Verdict::Schurian; };
  r.checks.push_back(guarded("wreath products are schurian iff both factors are", [&] {
    int cases = 0, bad = 0;
    for (const auto& s : catalog(24)) {
      auto g = build_group(s);
      for (const auto& a : enumerate_central(g, opt.sweep.enumeration).rings)
        for (const auto& d : find_wreath_decompositions(a)) {
          if (!d.nontrivial || d.upper != d.lower) continue;
          ++cases;
          const bool factors = schurian(restriction(a, d.upper)) && schurian(quotient_sring(a, quotient_group(*g, d.upper)));
          if (factors != schurian(a)) ++bad;
        }
    }
    return check("wreath products are schurian iff both factors are", bad == 0,
                 std::to_string(cases) + " wreath decompositions up to order 24");
  }));
  r.checks.push_back(guarded("a nonschurian factor gives a nonschurian wreath product", [&] {
    // The Shrikhande S-ring over C4 x C4 wreathed with T over C2.
    auto c44 = build_group("direct(cyclic:4,cyclic:4)");
    std::optional<SRing> shrikhande;
    for (const auto& a : enumerate_central(c44, opt.sweep.enumeration).rings)
      if (a.rank() == 3 && !schurian(a)) shrikhande = a;
    if (!shrikhande) return check("a nonschurian factor gives a nonschurian wreath product", false, "no rank-3 nonschurian member");
    auto g = build_group("direct(direct(cyclic:4,cyclic:4),cyclic:2)");
    for (const auto& h : normal_subgroups(*g)) {
      if (h.order() != 16) continue;
      auto sub = induced_group(*g, h);
      const auto iso = find_isomorphism(*c44, *sub);
      if (!iso) continue;
      Partition blocks;
      for (const auto& b : shrikhande->blocks()) {
        ElementSet img;
        for (Element x : b) img.push_back((*iso)[x]);
        blocks.push_back(normalized(std::move(img)));
      }
      const SRing w = wreath(g, h, make_sring(sub, blocks), trivial(quotient_group(*g, h).quotient));
      const auto c = is_schurian(w, opt.sweep.aut);
      return check("a nonschurian factor gives a nonschurian wreath product",
                   is_generalized_wreath(w, h, h) && c.verdict == SchurityCertificate::Verdict::Nonschurian && verify_certificate(w, c),
                   "rank " + std::to_string(w.rank()) + " over " + g->spec() + ", |Aut| = " + to_string(c.aut_order));
    }
    return check("a nonschurian factor gives a nonschurian wreath product", false, "no normal C4 x C4");
  }));

  // Quotient heredity: G generalized Schur implies G/H generalized Schur.
  int quotients = 0, heredity_bad = 0;
  for (const auto& s : catalog(24)) {
    auto g = build_group(s);
    if (is_generalized_schur(g, opt.sweep).status != SchurVerdict::Status::True) continue;
    for (const auto& h : normal_subgroups(*g)) {
      if (h.order() == 1 || h.order() == g->order()) continue;
      ++quotients;
      if (is_generalized_schur(quotient_group(*g, h).quotient, opt.sweep).status != SchurVerdict::Status::True)
        ++heredity_bad;
    }
  }
  r.checks.push_back(check("quotients of generalized Schur groups are generalized Schur", heredity_bad == 0,
                           std::to_string(quotients) + " quotients"));
}

}  // namespace

const std::vector<std::string>& recipe_names() {
  static const std::vector<std::string> names = {"example1",      "thm1-positive", "thm1-negative", "thm2-camina",
                                                 "thm3-dihedral", "small-schur",   "lemma-suite"};
  return names;
}

RecipeResult run_recipe(const std::string& name, const RecipeOptions& opt) {
  static const std::map<std::string, std::function<void(RecipeResult&, const RecipeOptions&)>> table = {
      {"example1", example1},       {"thm1-positive", thm1_positive}, {"thm1-negative", thm1_negative},
      {"thm2-camina", thm2_camina}, {"thm3-dihedral", thm3_dihedral}, {"small-schur", small_schur},
      {"lemma-suite", lemma_suite}};
  auto it = table.find(name);
  if (it == table.end()) throw Error("unknown recipe '" + name + "'");
  RecipeResult r;
  r.recipe = name;
  const auto t0 = std::chrono::steady_clock::now();
  it->second(r, opt);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace schurlab
