#pragma once

#include <string>
#include <vector>

#include "schurlab/schurity.hpp"

namespace schurlab {

enum class CheckStatus { Pass, Fail, Undecided };
std::string to_string(CheckStatus s);

struct CheckOutcome {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
};

struct RecipeResult {
  std::string recipe;
  std::vector<CheckOutcome> checks;
  double seconds = 0.0;

  /// Fail if any check failed, else Undecided if any is undecided.
  CheckStatus overall() const;
  int count(CheckStatus s) const;
};

struct RecipeOptions {
  SweepOptions sweep;
};

/// example1, thm1-positive, thm1-negative, thm2-camina, thm3-dihedral,
/// small-schur, lemma-suite.
const std::vector<std::string>& recipe_names();
RecipeResult run_recipe(const std::string& name, const RecipeOptions& opt = {});

/// 0 passed, 10 some check failed, 20 undecided.
int exit_code(CheckStatus s);

/// Specs of the constructor catalog up to the given order: every group of
/// order <= 15, and a selection of larger ones.
std::vector<std::string> catalog(int max_order);

/// GCD(|X_max|, |X|) > 1 for every nonidentity basic set X.
bool coprime_condition(const SRing& a);

}  // namespace schurlab
