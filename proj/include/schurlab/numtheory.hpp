#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace schurlab {

bool is_prime(long long n);

/// Prime factorization as (prime, exponent) pairs, primes ascending.
std::vector<std::pair<long long, int>> factorize(long long n);

long long gcd(long long a, long long b);
long long mod_pow(long long base, long long exp, long long mod);

/// Multiplicative order of a modulo m (a coprime to m).
long long multiplicative_order(long long a, long long m);

/// If n = p^k for a prime p and k >= 1, returns p; otherwise 0.
long long prime_power_base(long long n);

/// Units modulo m in ascending order.
std::vector<long long> units_mod(long long m);

/// True iff n has one of the shapes p^k, pq^k, 2pq^k, pqr, 2pqr with
/// p, q, r distinct primes and k >= 0. The factor 2 may coincide with p.
bool cyclic_schur_family(long long n);

}  // namespace schurlab
