#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "dmaxsat/error.hpp"

namespace dmaxsat {

/// 1-based propositional variable index.
class VarId {
 public:
  explicit VarId(std::uint32_t index);

  std::uint32_t index() const noexcept { return index_; }

  friend bool operator==(VarId, VarId) = default;
  friend auto operator<=>(VarId, VarId) = default;

 private:
  std::uint32_t index_;
};

enum class NodeKind : std::uint8_t { True, False, Var, Not, And, Or };

/// Immutable tree node. Children are shared between formulas, never mutated.
struct Node {
  NodeKind kind;
  std::uint32_t var = 0;  // valid only for NodeKind::Var
  std::shared_ptr<const Node> left;
  std::shared_ptr<const Node> right;
};

using NodePtr = std::shared_ptr<const Node>;

/// Values of variables 1..n, n being the scope of the formula evaluated.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(std::size_t width) : bits_(width, false) {}
  explicit Assignment(std::vector<bool> bits) : bits_(std::move(bits)) {}

  /// Bit k of `bits` gives the value of variable k+1.
  static Assignment from_bits(std::uint64_t bits, std::size_t width);

  std::size_t size() const noexcept { return bits_.size(); }
  bool operator[](VarId v) const { return bits_.at(v.index() - 1); }
  void set(VarId v, bool value) { bits_.at(v.index() - 1) = value; }

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  std::vector<bool> bits_;
};

/// Operator tree over x1..xn with an explicit scope n. The scope may exceed
/// the highest variable that occurs; counts are taken over the whole scope.
class Formula {
 public:
  static Formula constant(bool value, std::uint32_t scope = 0);
  static Formula var(std::uint32_t index, std::uint32_t scope = 0);
  /// Wraps an existing tree; ScopeError if it uses a variable above `scope`.
  static Formula from_root(NodePtr root, std::uint32_t scope);

  /// The scope of a composite is the maximum of its operands' scopes.
  friend Formula operator!(const Formula& f);
  friend Formula operator&&(const Formula& a, const Formula& b);
  friend Formula operator||(const Formula& a, const Formula& b);

  /// Same tree, wider scope. Narrowing below a used variable is a ScopeError.
  Formula with_scope(std::uint32_t scope) const;

  std::uint32_t scope() const noexcept { return scope_; }
  const Node& root() const noexcept { return *root_; }
  const NodePtr& root_ptr() const noexcept { return root_; }

  /// Highest variable index occurring in the tree, 0 if none.
  std::uint32_t max_var() const;

  /// Structural equality, including scope.
  friend bool operator==(const Formula& a, const Formula& b);

  friend Formula shift(const Formula& f, std::uint32_t offset);

 private:
  Formula(NodePtr root, std::uint32_t scope) : root_(std::move(root)), scope_(scope) {}

  NodePtr root_;
  std::uint32_t scope_ = 0;
};

/// Right-folded conjunction f0 && (f1 && (...)). Requires a nonempty list.
Formula conjunction(const std::vector<Formula>& fs);
Formula disjunction(const std::vector<Formula>& fs);

bool evaluate(const Formula& f, const Assignment& a);

/// Number of Not/And/Or nodes.
std::size_t size(const Formula& f);

/// Relocates every variable x_i to x_{i+offset}; scope grows by offset.
Formula shift(const Formula& f, std::uint32_t offset);

}  // namespace dmaxsat
