#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ncribbon/composition.hpp"

namespace ncribbon {

struct SuiteResult {
  std::string suite;
  uint32_t max_degree = 0;
  uint64_t checks = 0;
  uint64_t failures = 0;
  std::string first_failure;  // empty when everything passed

  bool passed() const { return failures == 0; }
  std::string summary() const;
};

inline constexpr uint64_t kDefaultVerifySeed = 20240801;

/// Suites runnable by name: basis, branching, macdonald-positivity, omega,
/// nabla, multivariate, lemmas. Each runs exhaustively up to degree 6 (the
/// nabla routes up to 7) and samples randomized instances from the same
/// predicates at higher degrees, reporting counts and the first
/// counterexample on failure.
std::vector<std::string> suite_names();
SuiteResult run_suite(const std::string& name, uint32_t max_degree,
                      uint64_t seed = kDefaultVerifySeed);

/// The specialization-coherence checks of the acceptance gate: t=0, t=1,
/// q=0 and the multivariate collapse, for every basis, exhaustive in the
/// degree.
SuiteResult run_specialization_checks(uint32_t max_degree);

}  // namespace ncribbon
