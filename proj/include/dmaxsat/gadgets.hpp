#pragma once

#include <cstdint>
#include <vector>

#include "dmaxsat/count.hpp"
#include "dmaxsat/formula.hpp"

namespace dmaxsat {

/// Places g above f so that #result = #f + #g * 2^m, with m = f.scope() and
/// n = g.scope(). Result scope is m+n+1:
///
///   (f ∧ ¬x_{m+1} ∧ ... ∧ ¬x_{m+n+1}) ∨ (g[x_{m+1}..x_{m+n}] ∧ x_{m+n+1})
///
/// size(result) = size(f) + size(g) + 2n + 4.
Formula pack_pair(const Formula& f, const Formula& g);

struct PackedFormula {
  Formula formula;
  std::uint32_t digit_width;  // n, scope of every operand
  std::uint32_t digit_count;  // k
  std::uint32_t total_scope() const { return digit_count * (digit_width + 1); }
};

/// Packs k operands of common scope n so that #fi is the base-2^(n+1) digit
/// of order i of the packed count. Throws ArityError on an empty list or
/// mismatched scopes.
PackedFormula pack_many(const std::vector<Formula>& fs);

/// Base-2^(n+1) digits of c, least significant first. RangeError unless
/// c < 2^(k(n+1)).
std::vector<Count> unpack_digits(const Count& c, std::uint32_t n, std::uint32_t k);

/// Formula over x1..xn whose models are exactly the assignments with
/// sum_i 2^i x_{i+1} < c, so it has c models. Requires c <= 2^n.
Formula less_than_const(std::uint32_t n, const Count& c);

/// x * (2^n - x + 2 delta), for 0 <= delta <= 2^(n-1) and 0 <= x <= 2^n.
Count k_value(std::uint32_t n, const Count& delta, const Count& x);

/// Scope 2n+1 formula with count k_value(n, delta, #f):
///
///   f ∧ ((¬f[x_{n+1}..x_{2n}] ∧ ¬x_{2n+1}) ∨ (less_than_const(n, 2 delta)[x_{n+1}..x_{2n}] ∧ x_{2n+1}))
Formula psi_gadget(const Formula& f, const Count& delta);

}  // namespace dmaxsat
