#include <algorithm>

#include "doctest.h"
#include "oracles.hpp"
#include "schurlab/group.hpp"

using namespace schurlab;

namespace {

std::vector<int> class_sizes(const Group& g) {
  std::vector<int> s;
  for (const auto& c : conjugacy_classes(g)) s.push_back(static_cast<int>(c.size()));
  std::sort(s.begin(), s.end());
  return s;
}

const char* kCatalog[] = {"cyclic:1", "cyclic:7", "cyclic:12", "dihedral:6", "dihedral:8", "dihedral:16",
                          "quaternion:8", "quaternion:16", "semidihedral:16", "modular:16", "modular:27",
                          "elemabelian:2^3", "elemabelian:3^2", "extraspecial:27:+", "extraspecial:27:-",
                          "frobenius:7:3", "frobenius:5:4", "frobenius:11:5", "A4", "S4", "A5",
                          "direct(cyclic:4,cyclic:2)", "semidirect(cyclic:3,cyclic:4,pow:2)",
                          "centralprod(cyclic:4,quaternion:8,2:2)"};

}  // namespace

TEST_CASE("construction and spec round trip") {
  for (const char* spec : kCatalog) {
    CAPTURE(spec);
    auto g = build_group(spec);
    auto again = build_group(g->spec());
    CHECK(again->spec() == g->spec());
    CHECK(again->table() == g->table());
  }
  CHECK(build_group("dihedral:2^4")->spec() == "dihedral:16");
  CHECK_THROWS_AS(build_group("frobenius:7:4"), Error);
  CHECK_THROWS_AS(build_group("quaternion:12"), Error);
  CHECK_THROWS_AS(build_group("bogus:3"), Error);
  CHECK_THROWS_AS(build_group("semidirect(cyclic:5,cyclic:2,pow:3)"), Error);
  CHECK_THROWS_AS(build_group("centralprod(dihedral:6,cyclic:2,1:1)"), Error);
}

TEST_CASE("orders") {
  CHECK(build_group("A5")->order() == 60);
  CHECK(build_group("S4")->order() == 24);
  CHECK(build_group("extraspecial:27:+")->order() == 27);
  CHECK(build_group("centralprod(cyclic:4,quaternion:8,2:2)")->order() == 16);
  CHECK(build_group("frobenius:11:5")->order() == 55);
}

TEST_CASE("dihedral presentation") {
  auto g = build_group("dihedral:16");
  const Element a = 1, b = 8;
  CHECK(g->element_order(a) == 8);
  CHECK(g->element_order(b) == 2);
  CHECK(g->conj(a, b) == g->inv(a));
  for (int i = 0; i < 8; ++i) CHECK(g->pow(a, i) == i);
}

TEST_CASE("conjugacy classes against brute force") {
  for (const char* spec : kCatalog) {
    CAPTURE(spec);
    auto g = build_group(spec);
    auto mine = conjugacy_classes(*g);
    auto ref = oracle::classes(*g);
    std::sort(ref.begin(), ref.end());
    CHECK(mine == ref);
  }
  CHECK(class_sizes(*build_group("A5")) == std::vector<int>{1, 12, 12, 15, 20});
  CHECK(class_sizes(*build_group("dihedral:8")) == std::vector<int>{1, 1, 2, 2, 2});
  CHECK(class_sizes(*build_group("cyclic:4")) == std::vector<int>{1, 1, 1, 1});
}

TEST_CASE("class_of inside a subgroup") {
  auto g = build_group("dihedral:6");
  Subgroup h = generated_subgroup(*g, {1});
  CHECK(class_of(*g, 1, h) == ElementSet{1});
  CHECK(class_of(*g, 0, whole(*g)) == ElementSet{0});
  CHECK(class_of(*g, 1, whole(*g)) == ElementSet{1, 2});
  CHECK_THROWS_AS(class_of(*g, 3, h), Error);
}

TEST_CASE("generated subgroups") {
  auto d = build_group("dihedral:16");
  CHECK(generated_subgroup(*d, {}).elements == ElementSet{0});
  CHECK(generated_subgroup(*d, {2}).elements == ElementSet{0, 2, 4, 6});
  auto a5 = build_group("A5");
  for (int x = 1; x < 60; ++x)
    for (int y = x + 1; y < 60; y += 7) {
      auto mine = generated_subgroup(*a5, {x, y}).elements;
      CHECK(mine == oracle::closure(*a5, {x, y}));
    }
}

TEST_CASE("quotients") {
  auto a4 = build_group("A4");
  Subgroup v4;
  for (int x = 0; x < 12; ++x)
    if (a4->element_order(x) <= 2) v4.elements.push_back(x);
  REQUIRE(is_normal(*a4, v4));
  auto s = quotient_group(*a4, v4);
  CHECK(s.quotient->order() == 3);
  for (int x = 0; x < 12; ++x)
    for (int y = 0; y < 12; ++y) CHECK(s.project(a4->mul(x, y)) == s.quotient->mul(s.project(x), s.project(y)));
  auto d8 = build_group("dihedral:8");
  CHECK(quotient_group(*d8, generated_subgroup(*d8, {1})).quotient->order() == 2);
  CHECK(quotient_group(*d8, trivial_subgroup()).quotient->order() == 8);
  CHECK_THROWS_AS(quotient_group(*d8, generated_subgroup(*d8, {4})), Error);
}

TEST_CASE("center and Frattini") {
  auto q8 = build_group("quaternion:8");
  CHECK(center(*q8).order() == 2);
  CHECK(frattini(*q8).order() == 2);
  CHECK(frattini(*build_group("elemabelian:2^3")).order() == 1);
  CHECK(center(*build_group("cyclic:9")).order() == 9);
  CHECK(frattini(*build_group("cyclic:8")).order() == 4);
  for (const char* spec : kCatalog) {
    CAPTURE(spec);
    auto g = build_group(spec);
    CHECK(inner_automorphisms(*g).order() * center(*g).order() == g->order());
  }
}

TEST_CASE("automorphism groups") {
  CHECK(automorphism_group(*build_group("cyclic:4")).order() == 2);
  CHECK(automorphism_group(*build_group("elemabelian:2^2")).order() == 6);
  CHECK(automorphism_group(*build_group("A5")).order() == 120);
  CHECK(inner_automorphisms(*build_group("A5")).order() == 60);
  CHECK(automorphism_group(*build_group("quaternion:8")).order() == 24);
  CHECK(automorphism_group(*build_group("dihedral:8")).order() == 8);
  CHECK(automorphism_group(*build_group("elemabelian:2^3")).order() == 168);
  for (const char* spec : {"cyclic:6", "dihedral:6", "dihedral:8", "quaternion:8", "direct(cyclic:2,cyclic:4)",
                           "cyclic:9"}) {
    CAPTURE(spec);
    auto g = build_group(spec);
    CHECK(automorphism_group(*g).order() == oracle::group_aut_order(*g));
  }
}

TEST_CASE("Camina pairs") {
  auto s3 = build_group("dihedral:6");
  CHECK(is_camina_pair(*s3, generated_subgroup(*s3, {1})));
  auto q8 = build_group("quaternion:8");
  CHECK(is_camina_pair(*q8, center(*q8)));
  auto c6 = build_group("cyclic:6");
  CHECK_FALSE(is_camina_pair(*c6, generated_subgroup(*c6, {2})));
  CHECK_THROWS_AS(is_camina_pair(*s3, generated_subgroup(*s3, {3})), Error);
  // Classes outside H are unions of H-cosets.
  for (const char* spec : {"frobenius:7:3", "extraspecial:27:+", "A4", "frobenius:5:4"}) {
    auto g = build_group(spec);
    for (const auto& n : normal_subgroups(*g)) {
      if (n.order() == 1 || n.order() == g->order() || !is_camina_pair(*g, n)) continue;
      for (const auto& cls : conjugacy_classes(*g)) {
        if (n.contains(cls.front())) continue;
        for (Element x : cls)
          for (Element h : n.elements) CHECK(contains(cls, g->mul(x, h)));
      }
    }
  }
}

TEST_CASE("maximal cyclic subgroups") {
  CHECK(has_maximal_cyclic_subgroup(*build_group("cyclic:27")));
  CHECK(has_maximal_cyclic_subgroup(*build_group("dihedral:16")));
  CHECK(has_maximal_cyclic_subgroup(*build_group("quaternion:16")));
  CHECK_FALSE(has_maximal_cyclic_subgroup(*build_group("elemabelian:3^3")));
  CHECK_THROWS_AS(has_maximal_cyclic_subgroup(*build_group("cyclic:6")), Error);
}

TEST_CASE("isomorphisms") {
  auto a = build_group("frobenius:5:2");
  auto b = build_group("dihedral:10");
  auto iso = find_isomorphism(*a, *b);
  REQUIRE(iso);
  CHECK(is_homomorphism(*a, *b, *iso));
  CHECK_FALSE(find_isomorphism(*build_group("cyclic:4"), *build_group("elemabelian:2^2")));
  CHECK(find_isomorphism(*build_group("extraspecial:8:+"), *build_group("dihedral:8")));
  CHECK(find_isomorphism(*build_group("extraspecial:27:-"), *build_group("modular:27")));
}
