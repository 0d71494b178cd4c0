#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "schurlab/common.hpp"
#include "schurlab/perm.hpp"

namespace schurlab {

/// A finite group held as an explicit multiplication table over element
/// indices 0..n-1, with 0 the identity.
class Group {
 public:
  /// `table` is row-major n*n. Validates the group axioms; associativity is
  /// checked exhaustively up to `kAssociativityExhaustive` and sampled above.
  Group(int order, std::vector<Element> table, std::vector<std::string> labels, std::string spec);

  static constexpr int kAssociativityExhaustive = 128;

  int order() const { return n_; }
  Element mul(Element x, Element y) const {
    return table_[static_cast<std::size_t>(x) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(y)];
  }
  Element inv(Element x) const { return inv_[static_cast<std::size_t>(x)]; }
  Element identity() const { return 0; }
  Element pow(Element x, long long k) const;
  /// g^{-1} x g
  Element conj(Element x, Element g) const { return mul(mul(inv(g), x), g); }
  int element_order(Element x) const { return orders_[static_cast<std::size_t>(x)]; }
  int exponent() const;
  bool is_abelian() const;

  const std::string& label(Element x) const { return labels_[static_cast<std::size_t>(x)]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& spec() const { return spec_; }
  const std::vector<Element>& table() const { return table_; }

  /// Label -> element, or -1.
  Element find_label(std::string_view label) const;

  /// A small generating set picked greedily by index, redundant members dropped.
  const std::vector<Element>& generators() const { return gens_; }

 private:
  int n_;
  std::vector<Element> table_;
  std::vector<Element> inv_;
  std::vector<int> orders_;
  std::vector<std::string> labels_;
  std::string spec_;
  std::vector<Element> gens_;
};

using GroupPtr = std::shared_ptr<const Group>;

/// A subgroup as a sorted element list of its parent group.
struct Subgroup {
  ElementSet elements;

  int order() const { return static_cast<int>(elements.size()); }
  bool contains(Element x) const { return schurlab::contains(elements, x); }
  bool operator==(const Subgroup&) const = default;
};

/// A section U/L: L normal in U, with the quotient group and the canonical
/// epimorphism from U onto it.
struct Section {
  Subgroup upper;  // U
  Subgroup lower;  // L
  GroupPtr quotient;
  /// Indexed by parent element; -1 for elements outside U.
  std::vector<Element> epimorphism;

  Element project(Element x) const { return epimorphism[static_cast<std::size_t>(x)]; }
  /// Elements of U mapping to quotient element q.
  ElementSet preimage(Element q) const;
};

/// Builds a group from a recipe string; see docs/group-specs.md.
GroupPtr build_group(std::string_view spec);

/// Orbits of conjugation; blocks sorted, ordered by minimum element.
std::vector<ElementSet> conjugacy_classes(const Group& g);
ElementSet class_of(const Group& g, Element h, const Subgroup& H);

Subgroup generated_subgroup(const Group& g, const ElementSet& x);
bool is_subgroup(const Group& g, const ElementSet& x);
bool is_normal(const Group& g, const Subgroup& h);
Subgroup whole(const Group& g);
Subgroup trivial_subgroup();

/// G/N as a section with U = G.
Section quotient_group(const Group& g, const Subgroup& n);
/// U/L for L normal in U.
Section make_section(const Group& g, const Subgroup& upper, const Subgroup& lower);
/// The subgroup H as a group in its own right: element i is H.elements[i].
GroupPtr induced_group(const Group& g, const Subgroup& h);

Subgroup center(const Group& g);

inline constexpr int kSubgroupSearchCap = 64;
std::vector<Subgroup> all_subgroups(const Group& g);
std::vector<Subgroup> maximal_subgroups(const Group& g);
std::vector<Subgroup> normal_subgroups(const Group& g);
Subgroup frattini(const Group& g);

inline constexpr int kAutomorphismCap = 64;
/// Aut(G) acting on element indices.
PermGroup automorphism_group(const Group& g);
PermGroup inner_automorphisms(const Group& g);
/// The permutation x -> g^{-1} x g.
Perm conjugation_perm(const Group& g, Element by);

bool is_camina_pair(const Group& g, const Subgroup& h);
bool has_maximal_cyclic_subgroup(const Group& g);

/// Group isomorphism a -> b as an element map, if one exists. Small orders only.
std::optional<std::vector<Element>> find_isomorphism(const Group& a, const Group& b);

/// Checks that `map` (indexed by elements of `a`) is a homomorphism into `b`.
bool is_homomorphism(const Group& a, const Group& b, const std::vector<Element>& map);

}  // namespace schurlab
