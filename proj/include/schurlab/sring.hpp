#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "schurlab/common.hpp"
#include "schurlab/group.hpp"

namespace schurlab {

using Partition = std::vector<ElementSet>;

/// Sorts every block and orders blocks by their minimum element.
Partition canonical_partition(Partition p);

/// Sorted multiset of block sizes.
using SizeMultiset = std::vector<int>;

/// p^Z_{X,Y}: for z in basic set Z, the number of (x, y) in X x Y with xy = z.
class StructureConstants {
 public:
  StructureConstants(int rank, std::vector<std::int64_t> data) : rank_(rank), data_(std::move(data)) {}
  int rank() const { return rank_; }
  std::int64_t operator()(int x, int y, int z) const {
    return data_[(static_cast<std::size_t>(x) * static_cast<std::size_t>(rank_) + static_cast<std::size_t>(y)) *
                     static_cast<std::size_t>(rank_) +
                 static_cast<std::size_t>(z)];
  }

 private:
  int rank_;
  std::vector<std::int64_t> data_;
};

/// A Schur ring over a group, stored as its partition into basic sets.
/// Blocks are canonical: sorted internally and ordered by minimum element,
/// so block 0 is always {e}.
class SRing {
 public:
  const Group& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  int rank() const { return static_cast<int>(blocks_.size()); }
  const Partition& blocks() const { return blocks_; }
  const ElementSet& block(int i) const { return blocks_[static_cast<std::size_t>(i)]; }
  int block_of(Element x) const { return block_of_[static_cast<std::size_t>(x)]; }
  int inverse_block(int b) const { return inverse_[static_cast<std::size_t>(b)]; }
  SizeMultiset sizes() const;

  /// Computed once on first request.
  const StructureConstants& structure_constants() const;

  /// Same group order and same partition.
  bool same_partition(const SRing& other) const { return blocks_ == other.blocks_; }

  /// Internal: wraps a partition already known to satisfy the axioms.
  static SRing trusted(GroupPtr g, Partition canonical_blocks);

 private:
  SRing() = default;
  struct Cache;

  GroupPtr group_;
  Partition blocks_;
  std::vector<int> block_of_;
  std::vector<int> inverse_;
  std::shared_ptr<Cache> cache_;
};

/// Why a partition failed to define an S-ring.
struct Rejection {
  enum class Axiom { Identity, Inverse, Closure };
  Axiom axiom;
  std::vector<int> blocks;      // offending block indices (canonical order)
  std::vector<Element> elements;  // witnesses
  std::string message;
};

std::string to_string(Rejection::Axiom a);

struct PartitionCheck {
  std::optional<SRing> ring;
  std::optional<Rejection> rejection;
  explicit operator bool() const { return ring.has_value(); }
};

/// Validates the three S-ring axioms. Throws Error if `p` is not a partition.
PartitionCheck from_partition(GroupPtr g, Partition p);
/// As from_partition, throwing on rejection.
SRing make_sring(GroupPtr g, Partition p);

SRing trivial(GroupPtr g);
SRing full(GroupPtr g);
SRing center_sring(GroupPtr g);

bool is_central(const SRing& a);
/// True iff every basic set of `coarse` is a union of basic sets of `fine`.
bool subring_le(const SRing& coarse, const SRing& fine);

/// {g : gX = Xg = X}
Subgroup radical(const Group& g, const ElementSet& x);
bool is_a_set(const SRing& a, const ElementSet& x);

inline constexpr int kASubgroupCap = 128;
/// All A-subgroups, ordered by (order, elements).
std::vector<Subgroup> a_subgroups(const SRing& a);
bool is_primitive(const SRing& a);

/// {x^m : x in X}
ElementSet power_set(const Group& g, const ElementSet& x, long long m);
/// For every m coprime to |G| and every basic set X, X^(m) is a basic set.
bool verify_power_closure(const SRing& a);

struct SeparationVerdict {
  enum class Status { NotApplicable, Pass, Fail };
  Status status = Status::NotApplicable;
  Subgroup generated;  // <X>
  Subgroup rad;        // rad(X)
  std::string detail;
};

/// Checks the separation property for basic set `block` and any subgroup `h`
/// (an A-subgroup never meets a basic set partially):
/// whenever X meets both H and G\H and <X cap H> <= rad(X \ H), then
/// X = <X> \ rad(X) and rad(X) <= H.
SeparationVerdict separation_check(const SRing& a, int block, const Subgroup& h);

/// A_S for the A-section S = U/L, as an S-ring over S.quotient.
SRing quotient_sring(const SRing& a, const Section& s);
/// A_U for an A-subgroup U, over induced_group(G, U).
SRing restriction(const SRing& a, const Subgroup& u);

/// Wreath product over G: blocks of B inside H plus preimages of the
/// nonidentity blocks of C. B lives over induced_group(G, H), C over the
/// quotient of quotient_group(G, H).
SRing wreath(GroupPtr g, const Subgroup& h, const SRing& b, const SRing& c);

bool is_generalized_wreath(const SRing& a, const Subgroup& u, const Subgroup& l);

struct WreathDecomposition {
  Subgroup upper;
  Subgroup lower;
  bool nontrivial = false;
};
std::vector<WreathDecomposition> find_wreath_decompositions(const SRing& a);

StructureConstants structure_constants(const SRing& a);

/// The smallest S-ring over G in which every seed is an A-set.
SRing sring_closure(GroupPtr g, const std::vector<ElementSet>& seeds);

struct CaminaDecomposition {
  Subgroup lower;  // L
  Subgroup upper;  // U
  bool h_is_a_subgroup = false;
};

/// A = (A_L wr T_{U/L}) wr A_{G/U} with L <= H <= U. The reconstruction is
/// verified; a mismatch throws Error.
CaminaDecomposition camina_decomposition(const SRing& a, const Subgroup& h);

/// Rebuilds (A_L wr T_{U/L}) wr A_{G/U} from A.
SRing double_wreath(const SRing& a, const Subgroup& lower, const Subgroup& upper);

enum class DihedralBranch { WreathRank2, WreathRank3, GeneralizedOverA1 };
std::string to_string(DihedralBranch b);

struct DihedralStructure {
  DihedralBranch branch;
  Subgroup l;   // maximal A-subgroup of <a>
  Subgroup a1;  // only for GeneralizedOverA1: the index-2 subgroup of <a>
};

/// Classifies a central S-ring over dihedral:2n (n >= 3, elements ordered as
/// built by build_group). Throws Error if no branch applies.
DihedralStructure dihedral_structure(const SRing& a);

}  // namespace schurlab
