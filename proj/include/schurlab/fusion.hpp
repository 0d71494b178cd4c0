#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "schurlab/group.hpp"
#include "schurlab/perm.hpp"
#include "schurlab/sring.hpp"

namespace schurlab {

/// The atoms of a fusion search (conjugacy classes, or singletons) with the
/// structure constants of the S-ring they span.
class AtomAlgebra {
 public:
  static AtomAlgebra classes(GroupPtr g);
  static AtomAlgebra singletons(GroupPtr g);

  const GroupPtr& group() const { return group_; }
  int size() const { return k_; }
  const ElementSet& atom(int i) const { return atoms_[i]; }
  int atom_of(Element x) const { return atom_of_[x]; }
  int inverse(int i) const { return inverse_[i]; }
  /// Coefficient of any element of atom z in (atom i)(atom j).
  int coef(int i, int j, int z) const { return coef_[(static_cast<std::size_t>(i) * k_ + j) * k_ + z]; }

  /// Coarsest S-ring partition of the atoms refining `color` (atom 0 is
  /// always isolated). Returns canonical labels: cells numbered by their
  /// first atom. Uses hashed signatures, so in the worst case the result may
  /// be coarser than the true closure, never finer.
  std::vector<int> closure(const std::vector<int>& color) const;

  /// Exact S-ring test for an atom coloring.
  bool is_sring(const std::vector<int>& color) const;

  /// Element partition from an atom coloring.
  Partition expand(const std::vector<int>& color) const;

 private:
  GroupPtr group_;
  int k_ = 0;
  std::vector<ElementSet> atoms_;
  std::vector<int> atom_of_;
  std::vector<int> inverse_;
  std::vector<int> coef_;

  static AtomAlgebra build(GroupPtr g, std::vector<ElementSet> atoms);
};

enum class EnumerationMode { Central, All };
std::string to_string(EnumerationMode m);

struct EnumerationOptions {
  /// Most search units (atoms, or rational atoms when multipliers are used).
  int cap_atoms = 24;
  /// Largest group order for enumerate_all.
  int cap_order = 25;
  /// Worker threads; 0 means one.
  int jobs = 1;
  /// Use the multiplier lemma (two-phase search) wherever it is valid.
  bool use_multipliers = true;
  /// Search node limit; 0 means unlimited.
  std::uint64_t node_budget = 0;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t prunes = 0;
  double seconds = 0.0;
};

struct RingAnnotation {
  int rank = 0;
  SizeMultiset sizes;
  bool central = false;
  bool primitive = false;
  std::optional<bool> schurian;
  std::vector<std::string> tags;
};

struct EnumerationReport {
  std::string group_spec;
  EnumerationMode mode = EnumerationMode::Central;
  std::vector<SRing> rings;  // canonical order: by rank, then blocks
  std::vector<RingAnnotation> notes;
  SearchStats stats;
};

/// All central S-rings over g.
EnumerationReport enumerate_central(GroupPtr g, const EnumerationOptions& opt = {});
/// All S-rings over g.
EnumerationReport enumerate_all(GroupPtr g, const EnumerationOptions& opt = {});
/// Independent check: every set partition of the atoms through from_partition.
EnumerationReport brute_force_partitions(GroupPtr g, EnumerationMode mode);
inline constexpr int kBruteForceAtomCap = 8;

/// Blocks are the orbits of K, a group of automorphisms of g.
SRing cyclotomic(GroupPtr g, const PermGroup& k);

/// Fills rank, sizes, centrality and primitivity.
RingAnnotation annotate(const SRing& a);

/// Sorts rings canonically and rebuilds the notes.
void finalize_report(EnumerationReport& r);

}  // namespace schurlab
