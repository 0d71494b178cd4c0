#include <algorithm>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "schurlab/sring.hpp"

using namespace schurlab;

namespace {

Partition from_labels(const std::vector<int>& lab) {
  Partition p;
  for (std::size_t x = 0; x < lab.size(); ++x) {
    if (lab[x] >= static_cast<int>(p.size())) p.resize(lab[x] + 1);
    p[lab[x]].push_back(static_cast<int>(x));
  }
  return p;
}

// All S-rings over a tiny group, by exhaustive set partitions.
std::vector<SRing> all_srings(const GroupPtr& g) {
  std::vector<SRing> out;
  oracle::for_each_set_partition(g->order(), [&](const std::vector<int>& lab) {
    auto r = from_partition(g, from_labels(lab));
    if (r) out.push_back(*r.ring);
  });
  return out;
}

}  // namespace

TEST_CASE("from_partition matches the group-ring oracle") {
  for (const char* spec : {"cyclic:4", "elemabelian:2^2", "cyclic:6", "dihedral:6", "cyclic:7", "dihedral:8",
                           "quaternion:8", "direct(cyclic:4,cyclic:2)"}) {
    CAPTURE(spec);
    auto g = build_group(spec);
    int accepted = 0;
    oracle::for_each_set_partition(g->order(), [&](const std::vector<int>& lab) {
      auto p = from_labels(lab);
      auto r = from_partition(g, p);
      const bool ref = oracle::is_sring(*g, p);
      CHECK(static_cast<bool>(r) == ref);
      if (r) ++accepted;
      else CHECK(r.rejection.has_value());
    });
    CHECK(accepted >= 2);
  }
}

TEST_CASE("rejection witnesses") {
  auto c4 = build_group("cyclic:4");
  auto r = from_partition(c4, {{0}, {1}, {2, 3}});
  REQUIRE_FALSE(r);
  CHECK(r.rejection->axiom == Rejection::Axiom::Inverse);
  auto r2 = from_partition(c4, {{0, 1}, {2}, {3}});
  REQUIRE_FALSE(r2);
  CHECK(r2.rejection->axiom == Rejection::Axiom::Identity);
  auto r3 = from_partition(build_group("cyclic:5"), {{0}, {1, 4}, {2}, {3}});
  REQUIRE_FALSE(r3);
  CHECK(r3.rejection->axiom == Rejection::Axiom::Closure);
  auto r4 = from_partition(build_group("cyclic:6"), {{0}, {1, 5}, {2, 3, 4}});
  REQUIRE_FALSE(r4);
  CHECK(r4.rejection->axiom == Rejection::Axiom::Closure);
  CHECK_THROWS_AS(from_partition(c4, {{0}, {1, 2}}), Error);
  CHECK_THROWS_AS(from_partition(c4, {{0}, {1, 2}, {2, 3}}), Error);
}

TEST_CASE("basic constructions") {
  for (const char* spec : {"cyclic:1", "cyclic:2", "dihedral:6", "A5", "quaternion:8"}) {
    auto g = build_group(spec);
    CHECK(from_partition(g, trivial(g).blocks()));
    CHECK(from_partition(g, full(g).blocks()));
    CHECK(from_partition(g, center_sring(g).blocks()));
    if (g->order() >= 2) CHECK(trivial(g).rank() == 2);
  }
  auto c6 = build_group("cyclic:6");
  CHECK(center_sring(c6).same_partition(full(c6)));
  auto a5 = build_group("A5");
  CHECK(center_sring(a5).sizes() == SizeMultiset{1, 12, 12, 15, 20});
}

TEST_CASE("centrality and refinement") {
  auto s3 = build_group("dihedral:6");
  CHECK(is_central(center_sring(s3)));
  CHECK_FALSE(is_central(full(s3)));
  for (const auto& a : all_srings(build_group("cyclic:6"))) CHECK(is_central(a));
  for (const auto& a : all_srings(s3)) {
    CHECK(subring_le(trivial(s3), a));
    CHECK(subring_le(a, full(s3)));
    CHECK(is_central(a) == subring_le(a, center_sring(s3)));
  }
}

TEST_CASE("radicals and A-subgroups") {
  auto g = build_group("dihedral:12");
  ElementSet all_but_e;
  for (int x = 1; x < 12; ++x) all_but_e.push_back(x);
  CHECK(radical(*g, all_but_e).order() == 1);
  Subgroup a1 = generated_subgroup(*g, {2});
  CHECK(radical(*g, a1.elements) == a1);
  ElementSet b_a1;
  for (Element x : a1.elements) b_a1.push_back(g->mul(6, x));
  CHECK(radical(*g, normalized(b_a1)) == a1);
  CHECK_THROWS_AS(radical(*g, {}), Error);

  auto c4 = build_group("cyclic:4");
  auto subs = a_subgroups(full(c4));
  REQUIRE(subs.size() == 3);
  CHECK(subs[1].elements == ElementSet{0, 2});
  CHECK_FALSE(is_primitive(full(c4)));
  CHECK(is_primitive(trivial(c4)));
  auto a5 = build_group("A5");
  CHECK(is_primitive(center_sring(a5)));
}

TEST_CASE("A-subgroups against brute force, with rad and generated subgroups") {
  for (const char* spec : {"cyclic:8", "dihedral:8", "quaternion:8", "elemabelian:2^3"}) {
    CAPTURE(spec);
    auto g = build_group(spec);
    std::vector<SRing> rings{full(g), center_sring(g), trivial(g)};
    for (const auto& a : rings) {
      std::set<ElementSet> brute;
      for (const auto& s : all_subgroups(*g))
        if (is_a_set(a, s.elements)) brute.insert(s.elements);
      std::set<ElementSet> mine;
      for (const auto& s : a_subgroups(a)) mine.insert(s.elements);
      CHECK(mine == brute);
      for (const auto& x : a.blocks()) {
        CHECK(is_a_set(a, generated_subgroup(*g, x).elements));
        CHECK(is_a_set(a, radical(*g, x).elements));
      }
      if (is_central(a))
        for (const auto& s : a_subgroups(a)) CHECK(is_normal(*g, s));
    }
  }
}

TEST_CASE("power maps") {
  auto g = build_group("cyclic:8");
  CHECK(power_set(*g, {1, 3}, 1) == ElementSet{1, 3});
  CHECK(power_set(*g, {1, 3}, 3) == ElementSet{1, 3});
  for (const char* spec : {"dihedral:8", "quaternion:8", "A4", "A5"}) {
    auto h = build_group(spec);
    CHECK(verify_power_closure(center_sring(h)));
    CHECK(verify_power_closure(trivial(h)));
  }
  auto c5 = build_group("cyclic:5");
  CHECK(verify_power_closure(make_sring(c5, {{0}, {1, 4}, {2, 3}})));
}

TEST_CASE("structure constants") {
  auto g = build_group("dihedral:10");
  auto t = trivial(g);
  const auto& sc = t.structure_constants();
  CHECK(sc(1, 1, 0) == 9);
  CHECK(sc(1, 1, 1) == 8);
  auto z = full(build_group("cyclic:5"));
  for (int x = 0; x < 5; ++x)
    for (int y = 0; y < 5; ++y)
      for (int w = 0; w < 5; ++w) CHECK(z.structure_constants()(x, y, w) == ((x + y) % 5 == w ? 1 : 0));
  auto a5 = center_sring(build_group("A5"));
  const auto& c = a5.structure_constants();
  for (int x = 0; x < a5.rank(); ++x)
    for (int y = 0; y < a5.rank(); ++y) {
      std::int64_t sum = 0;
      for (int w = 0; w < a5.rank(); ++w) sum += c(x, y, w) * static_cast<std::int64_t>(a5.block(w).size());
      CHECK(sum == static_cast<std::int64_t>(a5.block(x).size() * a5.block(y).size()));
      CHECK(c(x, y, 0) == (y == a5.inverse_block(x) ? static_cast<std::int64_t>(a5.block(x).size()) : 0));
    }
}

TEST_CASE("closure") {
  for (const char* spec : {"dihedral:8", "A4", "cyclic:9", "frobenius:7:3"}) {
    auto g = build_group(spec);
    CHECK(sring_closure(g, {}).same_partition(trivial(g)));
    std::vector<ElementSet> singles;
    for (int x = 0; x < g->order(); ++x) singles.push_back({x});
    CHECK(sring_closure(g, singles).same_partition(full(g)));
    CHECK(sring_closure(g, conjugacy_classes(*g)).same_partition(center_sring(g)));
  }
  // Minimality against brute force on C6: the closure is the coarsest S-ring
  // in which the seed is an A-set.
  auto c6 = build_group("cyclic:6");
  auto rings = all_srings(c6);
  for (const ElementSet& seed : std::vector<ElementSet>{{1}, {2, 4}, {3}, {1, 5}, {1, 2}}) {
    auto cl = sring_closure(c6, {seed});
    CHECK(is_a_set(cl, seed));
    for (const auto& a : rings)
      if (is_a_set(a, seed)) CHECK(subring_le(cl, a));
  }
}

TEST_CASE("quotients and restrictions") {
  auto s3 = build_group("dihedral:6");
  auto a = center_sring(s3);
  Subgroup c3 = generated_subgroup(*s3, {1});
  auto q = quotient_sring(a, quotient_group(*s3, c3));
  CHECK(q.rank() == 2);
  auto g = build_group("dihedral:12");
  auto t = trivial(g);
  CHECK(quotient_sring(t, quotient_group(*g, trivial_subgroup())).same_partition(t));
  auto r = restriction(center_sring(g), generated_subgroup(*g, {1}));
  CHECK(r.group().order() == 6);
  CHECK(r.rank() == 4);
  CHECK_THROWS_AS(quotient_sring(t, quotient_group(*g, generated_subgroup(*g, {2}))), Error);
}

TEST_CASE("wreath products") {
  auto g = build_group("dihedral:12");
  Subgroup h = generated_subgroup(*g, {1});
  auto w = wreath(g, h, trivial(induced_group(*g, h)), trivial(quotient_group(*g, h).quotient));
  CHECK(w.rank() == 3);
  CHECK(is_generalized_wreath(w, h, h));
  for (const auto& a : {center_sring(g), trivial(g), full(g)}) CHECK(is_generalized_wreath(a, whole(*g), trivial_subgroup()));
  auto decs = find_wreath_decompositions(w);
  CHECK(std::any_of(decs.begin(), decs.end(), [&](const WreathDecomposition& d) {
    return d.upper == h && d.lower == h && d.nontrivial;
  }));
  CHECK_THROWS_AS(wreath(g, generated_subgroup(*g, {6}), trivial(build_group("cyclic:2")),
                         trivial(build_group("cyclic:6"))),
                  Error);
}

TEST_CASE("separation lemma on small groups") {
  int applicable = 0;
  for (const char* spec : {"cyclic:8", "dihedral:8", "cyclic:6", "elemabelian:2^3", "quaternion:8"}) {
    auto g = build_group(spec);
    for (const auto& a : all_srings(g))
      for (const auto& h : all_subgroups(*g))
        for (int b = 1; b < a.rank(); ++b) {
          const auto v = separation_check(a, b, h);
          CHECK(v.status != SeparationVerdict::Status::Fail);
          if (v.status == SeparationVerdict::Status::Pass) ++applicable;
        }
  }
  CHECK(applicable > 0);
  auto c4 = build_group("cyclic:4");
  // A-subgroups never qualify: X lies inside or outside.
  CHECK(separation_check(full(c4), 1, whole(*c4)).status == SeparationVerdict::Status::NotApplicable);
  // T over C4 with H = {0, 2}: X = {1, 2, 3}, <X cap H> = H = rad({1, 3}).
  const Subgroup h{{0, 2}};
  const auto v = separation_check(trivial(c4), 1, h);
  REQUIRE(v.status == SeparationVerdict::Status::Pass);
  CHECK(v.generated.order() == 4);
  CHECK(v.rad.order() == 1);
}

TEST_CASE("Camina decompositions on small groups") {
  auto s3 = build_group("dihedral:6");
  Subgroup c3 = generated_subgroup(*s3, {1});
  auto d = camina_decomposition(center_sring(s3), c3);
  CHECK(d.lower == c3);
  CHECK(d.upper == c3);
  auto t = camina_decomposition(trivial(s3), c3);
  CHECK(t.lower.order() == 1);
  CHECK(t.upper.order() == 6);
  auto q8 = build_group("quaternion:8");
  CHECK_NOTHROW(camina_decomposition(center_sring(q8), center(*q8)));
}

TEST_CASE("dihedral structure") {
  auto d8 = build_group("dihedral:8");
  auto t = dihedral_structure(trivial(d8));
  CHECK(t.branch == DihedralBranch::WreathRank2);
  CHECK(t.l.order() == 1);
  CHECK_NOTHROW(dihedral_structure(center_sring(d8)));
  auto d12 = build_group("dihedral:12");
  auto c = dihedral_structure(center_sring(d12));
  CHECK(c.branch == DihedralBranch::GeneralizedOverA1);
  CHECK(c.a1.order() == 3);
}
