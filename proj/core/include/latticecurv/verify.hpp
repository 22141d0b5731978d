#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace latticecurv {

struct CaseResult {
  std::string label;
  bool passed = false;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::vector<CaseResult> cases;
  /// Largest |residual| / (1 + |E|) seen by the decomposition suite.
  double max_relative_residual = 0.0;

  int passed() const;
  int failed() const;
  bool ok() const { return failed() == 0; }
};

struct VerifyOptions {
  int trials = 100;
  std::uint64_t seed = 1;
  /// Decomposition suite: Lennard-Jones exponent; Heitmann-Radin when unset.
  std::optional<double> lj_exponent;
};

/// gauss-bonnet, decomposition, shell, removal, minimizers.
std::vector<std::string_view> suite_names();

/// Runs one invariant suite over generated corpora. Throws DomainError for
/// an unknown suite name.
SuiteResult run_suite(std::string_view suite, const VerifyOptions& options = {});

}  // namespace latticecurv
