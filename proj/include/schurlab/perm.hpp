#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "schurlab/common.hpp"

namespace schurlab {

/// A permutation of {0..n-1}. Composition reads left to right:
/// (p * q)[x] == q[p[x]], i.e. points are acted on from the right.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<int> image);

  static Perm identity(int degree);

  int degree() const { return static_cast<int>(image_.size()); }
  int operator[](int x) const { return image_[static_cast<std::size_t>(x)]; }
  const std::vector<int>& images() const { return image_; }

  Perm operator*(const Perm& other) const;
  Perm inverse() const;
  bool is_identity() const;
  /// Smallest moved point, or -1 for the identity.
  int first_moved() const;

  auto operator<=>(const Perm&) const = default;

  std::string cycle_string() const;

 private:
  std::vector<int> image_;
};

/// A permutation group given by generators, with a base and strong
/// generating set built lazily by Schreier-Sims.
class PermGroup {
 public:
  PermGroup(int degree, std::vector<Perm> generators);

  /// Adopts a base and strong generating set that is already known to be
  /// one (e.g. produced by a stabilizer-chain search). Not re-verified.
  static PermGroup from_strong_generators(int degree, std::vector<int> base,
                                          std::vector<Perm> strong_generators);

  static PermGroup trivial(int degree);
  static PermGroup symmetric(int degree);

  int degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return generators_; }

  BigInt order() const;
  bool contains(const Perm& p) const;
  std::vector<int> orbit(int point) const;
  /// Orbit partition, blocks sorted ascending and ordered by minimum.
  std::vector<std::vector<int>> orbits() const;
  std::vector<std::vector<int>> orbits(const std::vector<int>& domain) const;
  /// Full point stabilizer.
  PermGroup stabilizer(int point) const;
  bool is_transitive() const;
  bool is_regular() const;
  std::vector<int> base() const;
  std::vector<Perm> strong_generators() const;
  /// All elements; refuses when the order exceeds `cap`.
  std::vector<Perm> elements(std::size_t cap = 100000) const;

 private:
  struct Chain;
  struct State;

  PermGroup(int degree, std::vector<Perm> generators, std::shared_ptr<State> state);
  const Chain& chain() const;

  int degree_ = 0;
  std::vector<Perm> generators_;
  std::shared_ptr<State> state_;
};

/// Orbits of the group generated by `gens` (no chain needed).
std::vector<std::vector<int>> orbits_of(int degree, const std::vector<Perm>& gens);

}  // namespace schurlab
