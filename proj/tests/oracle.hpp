#pragma once

// Test-only ground truth: truth-table enumeration through evaluate(), kept
// apart from the library's word-parallel brute-force counter.

#include <cstdint>
#include <stdexcept>

#include "dmaxsat/formula.hpp"

namespace oracle {

inline std::uint64_t count_models(const dmaxsat::Formula& f) {
  if (f.scope() > 20) throw std::invalid_argument("oracle limited to 20 variables");
  std::uint64_t models = 0;
  for (std::uint64_t bits = 0; bits < (1ULL << f.scope()); ++bits) {
    models += dmaxsat::evaluate(f, dmaxsat::Assignment::from_bits(bits, f.scope())) ? 1 : 0;
  }
  return models;
}

}  // namespace oracle
