#include "dmaxsat/gadgets.hpp"

#include <string>

namespace dmaxsat {

Formula pack_pair(const Formula& f, const Formula& g) {
  const std::uint32_t m = f.scope();
  const std::uint32_t n = g.scope();
  const std::uint32_t width = m + n + 1;

  std::vector<Formula> low{f.with_scope(width)};
  for (std::uint32_t i = m + 1; i <= m + n + 1; ++i) low.push_back(!Formula::var(i, width));
  const Formula selector = Formula::var(width, width);
  return conjunction(low) || (shift(g, m) && selector);
}

PackedFormula pack_many(const std::vector<Formula>& fs) {
  if (fs.empty()) throw ArityError("pack_many needs at least one operand");
  const std::uint32_t n = fs.front().scope();
  for (std::size_t i = 1; i < fs.size(); ++i) {
    if (fs[i].scope() != n) {
      throw ArityError("operand " + std::to_string(i) + " has scope " +
                       std::to_string(fs[i].scope()) + ", expected " + std::to_string(n));
    }
  }
  Formula acc = fs.front().with_scope(n + 1) && !Formula::var(n + 1, n + 1);
  for (std::size_t i = 1; i < fs.size(); ++i) acc = pack_pair(acc, fs[i]);
  return {acc, n, static_cast<std::uint32_t>(fs.size())};
}

std::vector<Count> unpack_digits(const Count& c, std::uint32_t n, std::uint32_t k) {
  const std::uint64_t digit_bits = static_cast<std::uint64_t>(n) + 1;
  if (c < 0 || c >= pow2(digit_bits * k)) {
    throw RangeError("count " + to_string(c) + " does not fit in " + std::to_string(k) +
                     " digits of base 2^" + std::to_string(digit_bits));
  }
  const Count mask = pow2(digit_bits) - 1;
  std::vector<Count> digits;
  digits.reserve(k);
  Count rest = c;
  for (std::uint32_t i = 0; i < k; ++i) {
    digits.push_back(rest & mask);
    rest >>= digit_bits;
  }
  return digits;
}

Formula less_than_const(std::uint32_t n, const Count& c) {
  if (c < 0 || c > pow2(n)) {
    throw RangeError("less_than_const: c = " + to_string(c) + " outside [0, 2^" +
                     std::to_string(n) + "]");
  }
  if (c == pow2(n)) return Formula::constant(true, n);
  // Bits from least significant up: L_i is "x < c on bits 0..i".
  Formula acc = Formula::constant(false, n);
  for (std::uint32_t i = 0; i < n; ++i) {
    const Formula bit_clear = !Formula::var(i + 1, n);
    acc = bit_test(c, i) ? (bit_clear || acc) : (bit_clear && acc);
  }
  return acc;
}

Count k_value(std::uint32_t n, const Count& delta, const Count& x) {
  if (n == 0) throw RangeError("k_value: n must be at least 1");
  if (delta < 0 || delta > pow2(n - 1)) {
    throw RangeError("k_value: delta = " + to_string(delta) + " outside [0, 2^" +
                     std::to_string(n - 1) + "]");
  }
  if (x < 0 || x > pow2(n)) {
    throw RangeError("k_value: x = " + to_string(x) + " outside [0, 2^" + std::to_string(n) + "]");
  }
  return x * (pow2(n) - x + 2 * delta);
}

Formula psi_gadget(const Formula& f, const Count& delta) {
  const std::uint32_t n = f.scope();
  if (n == 0) throw RangeError("psi_gadget: operand scope must be at least 1");
  if (delta < 0 || delta > pow2(n - 1)) {
    throw RangeError("psi_gadget: delta = " + to_string(delta) + " outside [0, 2^" +
                     std::to_string(n - 1) + "]");
  }
  const std::uint32_t width = 2 * n + 1;
  const Formula selector = Formula::var(width, width);
  const Formula complement_branch = !shift(f, n) && !selector;
  const Formula padding_branch = shift(less_than_const(n, 2 * delta), n) && selector;
  return f.with_scope(width) && (complement_branch || padding_branch);
}

}  // namespace dmaxsat
