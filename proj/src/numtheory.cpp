#include "schurlab/numtheory.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace schurlab {

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::pair<long long, int>> factorize(long long n) {
  if (n < 1) throw std::invalid_argument("factorize: n must be positive");
  std::vector<std::pair<long long, int>> out;
  for (long long d = 2; d * d <= n; ++d) {
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e > 0) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

long long gcd(long long a, long long b) {
  a = std::llabs(a);
  b = std::llabs(b);
  while (b != 0) {
    long long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

long long mod_pow(long long base, long long exp, long long mod) {
  if (mod == 1) return 0;
  long long r = 1;
  base %= mod;
  if (base < 0) base += mod;
  while (exp > 0) {
    if (exp & 1) r = static_cast<long long>((__int128)r * base % mod);
    base = static_cast<long long>((__int128)base * base % mod);
    exp >>= 1;
  }
  return r;
}

long long multiplicative_order(long long a, long long m) {
  if (gcd(a, m) != 1) throw std::invalid_argument("multiplicative_order: not a unit");
  if (m == 1) return 1;
  long long x = ((a % m) + m) % m;
  long long k = 1;
  while (x != 1) {
    x = x * (((a % m) + m) % m) % m;
    ++k;
  }
  return k;
}

long long prime_power_base(long long n) {
  if (n < 2) return 0;
  auto f = factorize(n);
  return f.size() == 1 ? f.front().first : 0;
}

std::vector<long long> units_mod(long long m) {
  std::vector<long long> out;
  if (m == 1) return {0};
  for (long long a = 1; a < m; ++a)
    if (gcd(a, m) == 1) out.push_back(a);
  return out;
}

namespace {

// p^k, pq^k or pqr with p, q, r distinct.
bool odd_shape(long long n) {
  if (n == 1) return true;
  std::vector<int> exps;
  for (auto [p, e] : factorize(n)) exps.push_back(e);
  std::sort(exps.begin(), exps.end());
  if (exps.size() == 1) return true;
  if (exps.size() == 2) return exps[0] == 1;
  return exps.size() == 3 && exps[2] == 1;
}

}  // namespace

bool cyclic_schur_family(long long n) {
  if (n < 1) throw std::invalid_argument("cyclic_schur_family: n must be positive");
  // The leading 2 of 2pq^k and 2pqr is a factor on its own: p may be 2 as
  // well, so 36 = 2*2*3^2 and 60 = 2*2*3*5 qualify while 72 does not.
  return odd_shape(n) || (n % 2 == 0 && odd_shape(n / 2));
}

}  // namespace schurlab
