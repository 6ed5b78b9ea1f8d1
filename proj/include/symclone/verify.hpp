#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "symclone/basis.hpp"
#include "symclone/closure.hpp"
#include "symclone/membership.hpp"

namespace symclone {

struct VerifyConfig
{
  std::uint64_t seed = 1;
  // zero-propagation, n-subset
  std::size_t formulas = 500;
  std::size_t formula_max_nvars = 4;
  std::size_t formula_max_depth = 4;
  std::size_t formula_max_nodes = 64;
  // lemma-order, numofvar: f with n in [2, grid_max_n], g with m <= grid_max_m
  std::size_t grid_max_n = 3;
  std::size_t grid_max_m = 6;
  // prop2: l, m, n <= prop2_max
  std::size_t prop2_max = 6;
  // nf-intersec
  std::size_t tuples = 200;
  std::size_t tuple_max_arity = 30;
  // classifier
  std::size_t descriptors = 200;
  // basis-extraction
  std::size_t families = 50;
  std::size_t family_max_arity = 4;
  ClosureCaps caps;
  std::size_t max_counterexamples = 10;
};

struct SuiteReport
{
  std::string name;
  std::uint64_t seed = 0;
  std::size_t checked = 0;
  std::size_t violations = 0;
  /// Checks a resource cap kept from finishing.
  std::size_t incomplete = 0;
  std::vector<std::string> counterexamples;
  std::vector<std::pair<std::string, std::size_t>> stats;
  double seconds = 0;

  bool passed() const noexcept { return violations == 0 && incomplete == 0; }
};

/// Every seeded or exhaustive check over random formulas: subformula value 0 forces 0.
SuiteReport verify_zero_propagation(const VerifyConfig& cfg);
/// N of a formula lies inside N of each subformula.
SuiteReport verify_n_subset(const VerifyConfig& cfg);
/// Criteria against the closure oracle on the exhaustive (f, g) grid, plain and with i_2.
SuiteReport verify_lemma_order(const VerifyConfig& cfg);
/// i-identities: rewrite rules preserve tables, and i_m in [{i_n}] by the oracle.
SuiteReport verify_prop2(const VerifyConfig& cfg);
/// Intersections of d=0 periodic functions have period lcm of the inputs.
SuiteReport verify_nf_intersec(const VerifyConfig& cfg);
/// Variable counts and essential-subformula periods on oracle witnesses from the grid.
SuiteReport verify_numofvar(const VerifyConfig& cfg);
/// Random descriptors: classify against a numeric evaluation of the three conditions.
SuiteReport verify_classifier(const VerifyConfig& cfg);
/// Random finite families: removed generators are re-derived from the basis.
SuiteReport verify_basis_extraction(const VerifyConfig& cfg);

const std::vector<std::string>& suite_names();
/// Throws DomainError for an unknown name.
SuiteReport run_suite(const std::string& name, const VerifyConfig& cfg);

/*
 * Theorem conditions evaluated from member counts on the prefix k <= 40,
 * without the closed-form ratio exponent.
 */
struct NumericConditions
{
  bool finite_beyond_i = false;
  bool all_ratio_classes_finite = false;
  bool some_ratio_class_infinite = false;
};

NumericConditions numeric_conditions(const FamilyDescriptor& G);

/// Seeded valid descriptor; retries until validation passes.
FamilyDescriptor random_descriptor(std::uint64_t seed);

} // namespace symclone
