#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dmaxsat/formula.hpp"

namespace dmaxsat {

using PairPacker = std::function<Formula(const Formula&, const Formula&)>;

struct SelftestOptions {
  std::uint64_t seed = 42;
  /// Caps the case count of every suite; unset runs the default sizes.
  std::optional<std::uint64_t> budget;
  /// Packing used by the pair-law suite. Swapped out for mutation checks.
  PairPacker pack_pair_impl;
};

struct SuiteResult {
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::string counterexample;  // shrunk first failure, empty when none
};

struct SelftestReport {
  std::vector<SuiteResult> suites;

  bool passed() const;
  /// One line per suite plus a verdict line; deterministic for a given seed.
  std::string text() const;
};

SelftestReport run_selftest(const SelftestOptions& options);

/// pack_pair with the selector forcing dropped from the low branch, so f's
/// models leak into the high half. Only for exercising the selftest.
Formula corrupted_pack_pair(const Formula& f, const Formula& g);

}  // namespace dmaxsat
