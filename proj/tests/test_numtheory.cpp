#include "doctest.h"
#include "schurlab/numtheory.hpp"

using namespace schurlab;

TEST_CASE("factorization and primes") {
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  auto f = factorize(360);
  REQUIRE(f.size() == 3);
  CHECK(f[0] == std::pair<long long, int>{2, 3});
  CHECK(f[1] == std::pair<long long, int>{3, 2});
  CHECK(f[2] == std::pair<long long, int>{5, 1});
  CHECK(prime_power_base(27) == 3);
  CHECK(prime_power_base(12) == 0);
  CHECK(multiplicative_order(2, 7) == 3);
  CHECK(units_mod(8) == std::vector<long long>{1, 3, 5, 7});
}

TEST_CASE("cyclic Schur families") {
  CHECK(cyclic_schur_family(1));
  CHECK(cyclic_schur_family(16));   // p^k
  CHECK(cyclic_schur_family(30));   // pqr
  CHECK(cyclic_schur_family(12));   // pq^k
  CHECK(cyclic_schur_family(90));   // 2pq^k
  CHECK(cyclic_schur_family(210));  // 2pqr
  CHECK(cyclic_schur_family(36));   // 2 * 2 * 3^2
  CHECK(cyclic_schur_family(60));   // 2 * 2 * 3 * 5
  CHECK(cyclic_schur_family(100));
  CHECK_FALSE(cyclic_schur_family(72));
  CHECK_FALSE(cyclic_schur_family(144));
  CHECK_FALSE(cyclic_schur_family(9 * 25));
  CHECK_FALSE(cyclic_schur_family(2 * 3 * 5 * 7 * 11));
  for (int n = 3; n <= 16; ++n) CHECK(cyclic_schur_family(n));
}
