#include <set>

#include "doctest.h"
#include "schurlab/perm.hpp"

using namespace schurlab;

namespace {

// Closure of generators by breadth-first multiplication.
std::set<std::vector<int>> closure(const std::vector<Perm>& gens, int n) {
  std::set<std::vector<int>> seen{Perm::identity(n).images()};
  std::vector<Perm> queue{Perm::identity(n)};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const auto& g : gens) {
      Perm p = queue[i] * g;
      if (seen.insert(p.images()).second) queue.push_back(p);
    }
  return seen;
}

}  // namespace

TEST_CASE("composition acts from the right") {
  Perm p({1, 2, 0}), q({0, 2, 1});
  Perm pq = p * q;
  for (int x = 0; x < 3; ++x) CHECK(pq[x] == q[p[x]]);
  CHECK((p * p.inverse()).is_identity());
  CHECK_THROWS_AS(Perm({0, 0, 1}), Error);
}

TEST_CASE("order and membership against closure") {
  std::vector<std::vector<Perm>> cases = {
      {Perm({1, 2, 3, 4, 0}), Perm({1, 0, 2, 3, 4})},
      {Perm({1, 2, 0, 3, 4, 5}), Perm({0, 1, 2, 4, 5, 3})},
      {Perm({1, 0, 3, 2, 5, 4, 7, 6}), Perm({2, 3, 0, 1, 6, 7, 4, 5}), Perm({4, 5, 6, 7, 0, 1, 2, 3})},
      {Perm({1, 2, 3, 0, 5, 6, 7, 4, 8, 9}), Perm({4, 5, 6, 7, 0, 1, 2, 3, 9, 8})},
  };
  for (const auto& gens : cases) {
    const int n = gens[0].degree();
    PermGroup g(n, gens);
    auto all = closure(gens, n);
    CHECK(g.order() == BigInt(all.size()));
    for (const auto& img : all) CHECK(g.contains(Perm(img)));
    // orbit-stabilizer
    for (int x = 0; x < n; ++x) CHECK(g.stabilizer(x).order() * BigInt(g.orbit(x).size()) == g.order());
  }
  PermGroup s5 = PermGroup::symmetric(5);
  CHECK(s5.order() == 120);
  CHECK(s5.is_transitive());
  CHECK_FALSE(s5.is_regular());
  PermGroup c5(5, {Perm({1, 2, 3, 4, 0})});
  CHECK(c5.is_regular());
  CHECK_FALSE(c5.contains(Perm({1, 0, 2, 3, 4})));
  CHECK(c5.stabilizer(0).order() == 1);
}
