#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "schurlab/fusion.hpp"
#include "schurlab/group.hpp"
#include "schurlab/perm.hpp"
#include "schurlab/sring.hpp"

namespace schurlab {

/// x -> xg for each generator g.
PermGroup right_regular(const Group& g);
/// x -> gx for each generator g.
PermGroup left_regular(const Group& g);
Perm right_mult(const Group& g, Element by);
Perm left_mult(const Group& g, Element by);

/// V(K, G): the orbits of the stabilizer of the identity. K must contain G_r.
SRing transitivity_module(const PermGroup& k, GroupPtr g);

/// The complete arc-colored digraph of an S-ring: arc (g, h) gets the
/// basic set containing h g^{-1}.
class ColorGraph {
 public:
  explicit ColorGraph(const SRing& a);
  int size() const { return n_; }
  int colors() const { return colors_; }
  int operator()(int g, int h) const { return col_[static_cast<std::size_t>(g) * n_ + h]; }
  bool preserves(const Perm& p) const;

 private:
  int n_ = 0;
  int colors_ = 0;
  std::vector<std::uint16_t> col_;
};

struct AutOptions {
  /// Search nodes per call; 0 means unlimited.
  std::uint64_t node_budget = 2'000'000;
  /// Largest group order accepted.
  int cap_order = kMaxOrder;
};

struct AutResult {
  PermGroup group;  // Aut(A), with base [0, ...]
  std::vector<Perm> stabilizer_generators;  // generators of Aut(A)_0
  std::uint64_t nodes = 0;
};

/// Aut(A) by individualization-refinement on the color graph. Throws
/// BudgetExhausted when the node budget runs out.
AutResult automorphism_group(const SRing& a, const AutOptions& opt = {});

struct SchurityCertificate {
  enum class Verdict { Schurian, Nonschurian, Undecided };
  Verdict verdict = Verdict::Undecided;
  BigInt aut_order;
  std::vector<Perm> aut_generators;
  /// Orbits of Aut(A)_e, recomputed from the stabilizer's generators.
  std::vector<ElementSet> stabilizer_orbits;
  /// For nonschurian: a basic set and an orbit strictly inside it.
  int witness_block = -1;
  ElementSet witness_orbit;
  std::uint64_t nodes = 0;
  std::string note;
};

std::string to_string(SchurityCertificate::Verdict v);

SchurityCertificate is_schurian(const SRing& a, const AutOptions& opt = {});

/// Replays the generators: each must preserve the color graph, and the
/// orbits of those fixing 0 must reproduce the stated verdict.
bool verify_certificate(const SRing& a, const SchurityCertificate& c);

struct SweepOptions {
  EnumerationOptions enumeration;
  AutOptions aut;
  /// Stop at the first nonschurian member.
  bool stop_at_first = false;
};

struct SchurVerdict {
  enum class Status { True, False, Undecided };
  Status status = Status::Undecided;
  EnumerationReport report;  // notes carry the schurity of each member
  std::vector<SchurityCertificate> certificates;  // parallel to report.rings
  std::vector<int> nonschurian;  // indices into report.rings
  std::string note;
};

std::string to_string(SchurVerdict::Status s);

/// Every central S-ring over g schurian?
SchurVerdict is_generalized_schur(GroupPtr g, const SweepOptions& opt = {});
/// Every S-ring over g schurian?
SchurVerdict is_schur_group(GroupPtr g, const SweepOptions& opt = {});
/// Schurity of every member of an existing report.
SchurVerdict check_report(EnumerationReport report, const SweepOptions& opt = {});

struct TransferResult {
  SRing ring;                 // over H
  std::vector<Element> map;   // element of G -> element of H
};

/// Moves A along a regular subgroup R <= Aut(A) to an S-ring over H ~ R.
/// Element g corresponds to the r in R with 0^r = g.
TransferResult regular_subgroup_transfer(const SRing& a, const PermGroup& r, GroupPtr h);

}  // namespace schurlab
