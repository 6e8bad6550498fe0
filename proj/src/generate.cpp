#include "dmaxsat/generate.hpp"

#include <algorithm>

namespace dmaxsat {

std::uint64_t draw(Rng& rng, std::uint64_t n) { return n == 0 ? 0 : rng() % n; }

namespace {

Formula random_leaf(Rng& rng, std::uint32_t scope) {
  if (scope == 0 || draw(rng, 10) == 0) return Formula::constant(draw(rng, 2) == 1);
  return Formula::var(static_cast<std::uint32_t>(draw(rng, scope)) + 1);
}

Formula random_tree(Rng& rng, std::uint32_t scope, std::uint32_t depth) {
  if (depth == 0 || draw(rng, 4) == 0) return random_leaf(rng, scope);
  switch (draw(rng, 5)) {
    case 0:
      return !random_tree(rng, scope, depth - 1);
    case 1:
    case 2:
      return random_tree(rng, scope, depth - 1) && random_tree(rng, scope, depth - 1);
    default:
      return random_tree(rng, scope, depth - 1) || random_tree(rng, scope, depth - 1);
  }
}

std::vector<NodePtr> shrinks(const NodePtr& n) {
  static const NodePtr kTrue = std::make_shared<const Node>(Node{NodeKind::True});
  static const NodePtr kFalse = std::make_shared<const Node>(Node{NodeKind::False});
  std::vector<NodePtr> out;
  switch (n->kind) {
    case NodeKind::True:
    case NodeKind::False:
      return out;
    case NodeKind::Var:
      return {kFalse, kTrue};
    default:
      break;
  }
  out.push_back(n->left);
  if (n->right) out.push_back(n->right);
  out.push_back(kFalse);
  out.push_back(kTrue);
  for (const auto& l : shrinks(n->left)) {
    out.push_back(std::make_shared<const Node>(Node{n->kind, 0, l, n->right}));
  }
  if (n->right) {
    for (const auto& r : shrinks(n->right)) {
      out.push_back(std::make_shared<const Node>(Node{n->kind, 0, n->left, r}));
    }
  }
  return out;
}

}  // namespace

Formula random_formula(Rng& rng, std::uint32_t scope, std::uint32_t max_depth) {
  return random_tree(rng, scope, max_depth).with_scope(scope);
}

SplitInstance random_split_instance(Rng& rng, std::uint32_t x_width, std::uint32_t y_width,
                                    std::uint32_t max_depth) {
  const std::uint32_t scope = x_width + y_width;
  std::vector<std::uint32_t> vars(scope);
  for (std::uint32_t i = 0; i < scope; ++i) vars[i] = i + 1;
  for (std::uint32_t i = scope; i > 1; --i) std::swap(vars[i - 1], vars[draw(rng, i)]);
  std::vector<std::uint32_t> x(vars.begin(), vars.begin() + x_width);
  std::vector<std::uint32_t> y(vars.begin() + x_width, vars.end());
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return SplitInstance(random_formula(rng, scope, max_depth), std::move(x), std::move(y));
}

std::vector<Formula> one_step_shrinks(const Formula& f) {
  std::vector<Formula> out;
  for (auto& root : shrinks(f.root_ptr())) out.push_back(Formula::from_root(root, f.scope()));
  return out;
}

}  // namespace dmaxsat
