#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "dmaxsat/formula.hpp"
#include "dmaxsat/solver.hpp"

namespace dmaxsat {

using Rng = std::mt19937_64;

/// Uniform in [0, n). Modulo reduction keeps sequences identical across
/// standard libraries, unlike std::uniform_int_distribution.
std::uint64_t draw(Rng& rng, std::uint64_t n);

/// Random tree over x1..x_scope of depth at most max_depth. Leaves are
/// mostly variables; constants appear occasionally (always when scope is 0).
Formula random_formula(Rng& rng, std::uint32_t scope, std::uint32_t max_depth = 4);

/// Random split of a random formula with |x| = x_width and |y| = y_width.
/// Blocks are shuffled so x and y interleave in index order.
SplitInstance random_split_instance(Rng& rng, std::uint32_t x_width, std::uint32_t y_width,
                                    std::uint32_t max_depth = 5);

/// Every formula obtained by replacing one operator node with one of its
/// operands or with a constant. Used to shrink counterexamples.
std::vector<Formula> one_step_shrinks(const Formula& f);

}  // namespace dmaxsat
