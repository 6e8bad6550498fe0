#include "dmaxsat/solver.hpp"

#include <algorithm>
#include <charconv>

namespace dmaxsat {

SplitInstance::SplitInstance(Formula formula, std::vector<std::uint32_t> x_vars,
                             std::vector<std::uint32_t> y_vars, std::optional<Count> bound)
    : formula_(std::move(formula)),
      x_vars_(std::move(x_vars)),
      y_vars_(std::move(y_vars)),
      bound_(std::move(bound)) {
  const std::uint32_t scope = formula_.scope();
  std::vector<int> seen(scope + 1, 0);
  for (const auto* block : {&x_vars_, &y_vars_}) {
    for (std::uint32_t v : *block) {
      if (v == 0 || v > scope) {
        throw ScopeError("block variable " + std::to_string(v) + " outside scope 1.." +
                         std::to_string(scope));
      }
      if (seen[v]++) throw ScopeError("variable " + std::to_string(v) + " listed twice");
    }
  }
  for (std::uint32_t v = 1; v <= scope; ++v) {
    if (!seen[v]) throw ScopeError("variable " + std::to_string(v) + " is in neither block");
  }
  if (bound_ && (*bound_ < 0 || *bound_ > pow2(y_vars_.size()) + 1)) {
    throw RangeError("bound " + to_string(*bound_) + " outside [0, 2^" +
                     std::to_string(y_vars_.size()) + " + 1]");
  }
}

SplitInstance SplitInstance::from_blocks(Formula formula, std::string_view blocks,
                                         std::optional<Count> bound) {
  std::vector<std::uint32_t> x;
  std::vector<std::uint32_t> y;
  std::vector<bool> seen_label(2, false);
  std::size_t pos = 0;
  while (pos <= blocks.size()) {
    const std::size_t slash = std::min(blocks.find('/', pos), blocks.size());
    std::string_view part = blocks.substr(pos, slash - pos);
    pos = slash + 1;
    const auto first = part.find_first_not_of(" \t");
    if (first == std::string_view::npos) continue;
    part.remove_prefix(first);
    if (part.size() < 2 || (part[0] != 'x' && part[0] != 'y') ||
        part.find_first_not_of(" \t", 1) == std::string_view::npos ||
        part[part.find_first_not_of(" \t", 1)] != ':') {
      throw ScopeError("malformed block '" + std::string(part) + "', expected 'x: ...' or 'y: ...'");
    }
    const int label = part[0] == 'x' ? 0 : 1;
    if (seen_label[label]) throw ScopeError(std::string("block ") + part[0] + " declared twice");
    seen_label[label] = true;
    part.remove_prefix(part.find(':') + 1);
    auto& target = label == 0 ? x : y;
    std::size_t i = 0;
    while (i < part.size()) {
      while (i < part.size() && (part[i] == ' ' || part[i] == '\t')) ++i;
      if (i == part.size()) break;
      std::uint32_t v = 0;
      auto [ptr, ec] = std::from_chars(part.data() + i, part.data() + part.size(), v);
      if (ec != std::errc() || (ptr != part.data() + part.size() && *ptr != ' ' && *ptr != '\t')) {
        throw ScopeError("bad variable in block declaration: '" + std::string(part.substr(i)) + "'");
      }
      target.push_back(v);
      i = static_cast<std::size_t>(ptr - part.data());
    }
  }
  std::vector<bool> listed(formula.scope() + 1, false);
  for (const auto* block : {&x, &y}) {
    for (std::uint32_t v : *block) {
      if (v == 0 || v > formula.scope()) {
        throw ScopeError("block variable " + std::to_string(v) + " outside scope 1.." +
                         std::to_string(formula.scope()));
      }
      if (listed[v]) throw ScopeError("variable " + std::to_string(v) + " listed twice");
      listed[v] = true;
    }
  }
  for (std::uint32_t v = 1; v <= formula.scope(); ++v) {
    if (!listed[v]) y.push_back(v);
  }
  return SplitInstance(std::move(formula), std::move(x), std::move(y), std::move(bound));
}

SplitInstance SplitInstance::with_bound(Count bound) const {
  return SplitInstance(formula_, x_vars_, y_vars_, std::move(bound));
}

std::string format_assignment(const SplitInstance& inst, const std::vector<bool>& x_values) {
  std::string out;
  for (std::size_t i = 0; i < inst.x_vars().size(); ++i) {
    if (i) out += ' ';
    out += 'x' + std::to_string(inst.x_vars()[i]) + '=' + (x_values.at(i) ? '1' : '0');
  }
  return out;
}

namespace {

void check_chooser_limit(const SplitInstance& inst, std::uint32_t limit) {
  if (inst.x_vars().size() > limit) {
    throw LimitError("chooser block has " + std::to_string(inst.x_vars().size()) +
                     " variables, enumeration limited to " + std::to_string(limit));
  }
}

const Count& require_bound(const SplitInstance& inst) {
  if (!inst.bound()) throw RangeError("decision problem needs a bound");
  return *inst.bound();
}

// Chooser assignment number u in lexicographic order.
std::vector<bool> chooser_values(std::uint64_t u, std::size_t width) {
  std::vector<bool> xs(width);
  for (std::size_t j = 0; j < width; ++j) xs[j] = ((u >> (width - 1 - j)) & 1U) != 0;
  return xs;
}

class Evaluator {
 public:
  explicit Evaluator(const SplitInstance& inst) : inst_(inst), root_(store_.import(inst.formula())) {}

  Count count(const std::vector<bool>& xa) {
    CircuitStore::Id id = root_;
    for (std::size_t j = 0; j < xa.size(); ++j) id = store_.restrict(id, inst_.x_vars()[j], xa[j]);
    return store_.count_over(id, static_cast<std::uint32_t>(inst_.y_vars().size()));
  }

  std::optional<Witness> search(const Count& bound) {
    std::vector<bool> prefix;
    prefix.reserve(inst_.x_vars().size());
    return descend(root_, prefix, bound);
  }

 private:
  std::optional<Witness> descend(CircuitStore::Id id, std::vector<bool>& prefix,
                                 const Count& bound) {
    const auto& xs = inst_.x_vars();
    const auto free = static_cast<std::uint32_t>(xs.size() - prefix.size() + inst_.y_vars().size());
    if (!store_.at_least(id, free, bound)) return std::nullopt;
    if (prefix.size() == xs.size()) return Witness{prefix, store_.count_over(id, free)};
    for (bool value : {false, true}) {
      prefix.push_back(value);
      auto found = descend(store_.restrict(id, xs[prefix.size() - 1], value), prefix, bound);
      prefix.pop_back();
      if (found) return found;
    }
    return std::nullopt;
  }

  const SplitInstance& inst_;
  CircuitStore store_;
  CircuitStore::Id root_;
};

}  // namespace

Count count_given_x(const SplitInstance& inst, const std::vector<bool>& xa) {
  if (xa.size() != inst.x_vars().size()) {
    throw ScopeError("chooser assignment has " + std::to_string(xa.size()) +
                     " values, x block has " + std::to_string(inst.x_vars().size()));
  }
  return Evaluator(inst).count(xa);
}

std::optional<Witness> dmax_decide(const SplitInstance& inst, std::uint32_t chooser_limit) {
  const Count& bound = require_bound(inst);
  check_chooser_limit(inst, chooser_limit);
  Evaluator eval(inst);
  const std::size_t width = inst.x_vars().size();
  for (std::uint64_t u = 0; u < (1ULL << width); ++u) {
    auto xs = chooser_values(u, width);
    Count c = eval.count(xs);
    if (c >= bound) return Witness{std::move(xs), std::move(c)};
  }
  return std::nullopt;
}

Witness max_count(const SplitInstance& inst, std::uint32_t chooser_limit) {
  check_chooser_limit(inst, chooser_limit);
  Evaluator eval(inst);
  const std::size_t width = inst.x_vars().size();
  Witness best{chooser_values(0, width), eval.count(chooser_values(0, width))};
  for (std::uint64_t u = 1; u < (1ULL << width); ++u) {
    auto xs = chooser_values(u, width);
    Count c = eval.count(xs);
    if (c > best.achieved) best = Witness{std::move(xs), std::move(c)};
  }
  return best;
}

std::optional<Witness> dmax_pruned(const SplitInstance& inst, std::uint32_t chooser_limit) {
  const Count& bound = require_bound(inst);
  check_chooser_limit(inst, chooser_limit);
  return Evaluator(inst).search(bound);
}

}  // namespace dmaxsat
