#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dmaxsat/count.hpp"
#include "dmaxsat/formula.hpp"

namespace dmaxsat {

/// A formula whose scope is split into a chooser block x and a counted block y.
class SplitInstance {
 public:
  /// x_vars and y_vars must be disjoint and cover 1..scope exactly. A bound,
  /// when given, must satisfy 0 <= B <= 2^|y| + 1.
  SplitInstance(Formula formula, std::vector<std::uint32_t> x_vars,
                std::vector<std::uint32_t> y_vars, std::optional<Count> bound = std::nullopt);

  /// Parses a block declaration such as "x: 1 3 / y: 2 4 5". Variables not
  /// listed join the y block in ascending order.
  static SplitInstance from_blocks(Formula formula, std::string_view blocks,
                                   std::optional<Count> bound = std::nullopt);

  const Formula& formula() const { return formula_; }
  const std::vector<std::uint32_t>& x_vars() const { return x_vars_; }
  const std::vector<std::uint32_t>& y_vars() const { return y_vars_; }
  const std::optional<Count>& bound() const { return bound_; }

  SplitInstance with_bound(Count bound) const;

 private:
  Formula formula_;
  std::vector<std::uint32_t> x_vars_;
  std::vector<std::uint32_t> y_vars_;
  std::optional<Count> bound_;
};

/// Chooser assignment (parallel to x_vars) and the y-count it achieves.
struct Witness {
  std::vector<bool> x_values;
  Count achieved;

  friend bool operator==(const Witness&, const Witness&) = default;
};

/// "x1=1 x3=0" in x_vars order.
std::string format_assignment(const SplitInstance& inst, const std::vector<bool>& x_values);

inline constexpr std::uint32_t kDefaultChooserLimit = 24;

/// #{y : F(x, y)} for the chooser assignment xa (parallel to x_vars).
Count count_given_x(const SplitInstance& inst, const std::vector<bool>& xa);

/// Lexicographically least x (x_vars order, first variable most significant,
/// false before true) with count >= bound, by plain enumeration.
std::optional<Witness> dmax_decide(const SplitInstance& inst,
                                   std::uint32_t chooser_limit = kDefaultChooserLimit);

/// x maximizing the count; ties go to the lexicographically least x.
Witness max_count(const SplitInstance& inst, std::uint32_t chooser_limit = kDefaultChooserLimit);

/// Same contract as dmax_decide. Depth-first over x with pruning: a partial
/// assignment is abandoned when the count over all its free variables is
/// already below the bound, since that sum bounds every completion.
std::optional<Witness> dmax_pruned(const SplitInstance& inst,
                                   std::uint32_t chooser_limit = kDefaultChooserLimit);

}  // namespace dmaxsat
