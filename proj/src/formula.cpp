#include "dmaxsat/formula.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace dmaxsat {

VarId::VarId(std::uint32_t index) : index_(index) {
  if (index == 0) throw ScopeError("variable indices start at 1");
}

Assignment Assignment::from_bits(std::uint64_t bits, std::size_t width) {
  Assignment a(width);
  for (std::size_t i = 0; i < width && i < 64; ++i) a.bits_[i] = ((bits >> i) & 1U) != 0;
  return a;
}

Formula Formula::constant(bool value, std::uint32_t scope) {
  return Formula(std::make_shared<const Node>(Node{value ? NodeKind::True : NodeKind::False}),
                 scope);
}

Formula Formula::var(std::uint32_t index, std::uint32_t scope) {
  VarId id(index);
  return Formula(std::make_shared<const Node>(Node{NodeKind::Var, id.index()}),
                 std::max(scope, index));
}

Formula Formula::from_root(NodePtr root, std::uint32_t scope) {
  if (!root) throw ScopeError("null formula root");
  return Formula(std::move(root), 0).with_scope(scope);
}

Formula operator!(const Formula& f) {
  return Formula(std::make_shared<const Node>(Node{NodeKind::Not, 0, f.root_}), f.scope_);
}

Formula operator&&(const Formula& a, const Formula& b) {
  return Formula(std::make_shared<const Node>(Node{NodeKind::And, 0, a.root_, b.root_}),
                 std::max(a.scope_, b.scope_));
}

Formula operator||(const Formula& a, const Formula& b) {
  return Formula(std::make_shared<const Node>(Node{NodeKind::Or, 0, a.root_, b.root_}),
                 std::max(a.scope_, b.scope_));
}

Formula Formula::with_scope(std::uint32_t scope) const {
  if (scope < max_var()) {
    throw ScopeError("scope " + std::to_string(scope) + " is below variable x" +
                     std::to_string(max_var()));
  }
  return Formula(root_, scope);
}

namespace {

// Explicit stack: gadget chains can be deep and trees are shared.
template <typename Visit>
void for_each_node(const Node& root, Visit&& visit) {
  std::vector<const Node*> stack{&root};
  while (!stack.empty()) {
    const Node* n = stack.back();
    stack.pop_back();
    visit(*n);
    if (n->left) stack.push_back(n->left.get());
    if (n->right) stack.push_back(n->right.get());
  }
}

bool same_tree(const Node& a, const Node& b) {
  if (&a == &b) return true;
  if (a.kind != b.kind || a.var != b.var) return false;
  if (static_cast<bool>(a.left) != static_cast<bool>(b.left)) return false;
  if (static_cast<bool>(a.right) != static_cast<bool>(b.right)) return false;
  if (a.left && !same_tree(*a.left, *b.left)) return false;
  return !a.right || same_tree(*a.right, *b.right);
}

bool eval_node(const Node& n, const Assignment& a) {
  switch (n.kind) {
    case NodeKind::True:
      return true;
    case NodeKind::False:
      return false;
    case NodeKind::Var:
      return a[VarId(n.var)];
    case NodeKind::Not:
      return !eval_node(*n.left, a);
    case NodeKind::And:
      return eval_node(*n.left, a) && eval_node(*n.right, a);
    case NodeKind::Or:
      return eval_node(*n.left, a) || eval_node(*n.right, a);
  }
  return false;
}

NodePtr shift_node(const NodePtr& n, std::uint32_t offset) {
  switch (n->kind) {
    case NodeKind::True:
    case NodeKind::False:
      return n;
    case NodeKind::Var:
      return std::make_shared<const Node>(Node{NodeKind::Var, n->var + offset});
    case NodeKind::Not:
      return std::make_shared<const Node>(Node{NodeKind::Not, 0, shift_node(n->left, offset)});
    case NodeKind::And:
    case NodeKind::Or:
      return std::make_shared<const Node>(
          Node{n->kind, 0, shift_node(n->left, offset), shift_node(n->right, offset)});
  }
  return n;
}

}  // namespace

std::uint32_t Formula::max_var() const {
  std::uint32_t m = 0;
  for_each_node(*root_, [&](const Node& n) {
    if (n.kind == NodeKind::Var) m = std::max(m, n.var);
  });
  return m;
}

bool operator==(const Formula& a, const Formula& b) {
  return a.scope_ == b.scope_ && same_tree(*a.root_, *b.root_);
}

Formula conjunction(const std::vector<Formula>& fs) {
  if (fs.empty()) throw ArityError("conjunction of an empty list");
  Formula acc = fs.back();
  for (auto it = fs.rbegin() + 1; it != fs.rend(); ++it) acc = *it && acc;
  return acc;
}

Formula disjunction(const std::vector<Formula>& fs) {
  if (fs.empty()) throw ArityError("disjunction of an empty list");
  Formula acc = fs.back();
  for (auto it = fs.rbegin() + 1; it != fs.rend(); ++it) acc = *it || acc;
  return acc;
}

bool evaluate(const Formula& f, const Assignment& a) {
  if (a.size() != f.scope()) {
    throw ScopeError("assignment has " + std::to_string(a.size()) +
                     " values, formula scope is " + std::to_string(f.scope()));
  }
  return eval_node(f.root(), a);
}

std::size_t size(const Formula& f) {
  std::size_t ops = 0;
  for_each_node(f.root(), [&](const Node& n) {
    if (n.kind == NodeKind::Not || n.kind == NodeKind::And || n.kind == NodeKind::Or) ++ops;
  });
  return ops;
}

Formula shift(const Formula& f, std::uint32_t offset) {
  if (offset == 0) return f;
  return Formula(shift_node(f.root_, offset), f.scope_ + offset);
}

}  // namespace dmaxsat
