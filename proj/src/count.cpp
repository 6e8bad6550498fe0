#include "dmaxsat/count.hpp"

#include <algorithm>
#include <bit>
#include <iterator>

namespace dmaxsat {

Count pow2(std::uint64_t exponent) {
  Count c = 1;
  c <<= exponent;
  return c;
}

Count parse_count(const std::string& decimal) {
  if (decimal.empty() || decimal.size() > 100000 ||
      !std::all_of(decimal.begin(), decimal.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
    throw RangeError("not a nonnegative decimal count: '" + decimal + "'");
  }
  return Count(decimal);
}

std::string to_string(const Count& c) { return c.str(); }

// ---------------------------------------------------------------------------
// Brute force: 64 assignments per machine word over a postfix program.

namespace {

struct Op {
  NodeKind kind;
  std::uint32_t var;
};

void compile(const Node& n, std::vector<Op>& prog) {
  if (n.left) compile(*n.left, prog);
  if (n.right) compile(*n.right, prog);
  prog.push_back({n.kind, n.var});
}

constexpr std::uint64_t kLanePattern[6] = {
    0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL, 0xF0F0F0F0F0F0F0F0ULL,
    0xFF00FF00FF00FF00ULL, 0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL,
};

}  // namespace

Count count_bruteforce(const Formula& f, std::uint32_t limit) {
  if (f.scope() > limit) {
    throw LimitError("brute-force enumeration limited to " + std::to_string(limit) +
                     " variables, formula scope is " + std::to_string(f.scope()));
  }
  std::vector<Op> prog;
  compile(f.root(), prog);
  std::vector<std::uint64_t> stack;
  stack.reserve(prog.size());

  const std::uint32_t scope = f.scope();
  const std::uint64_t lanes_mask = scope >= 6 ? ~0ULL : ((1ULL << (1U << scope)) - 1);
  const std::uint64_t blocks = scope > 6 ? (1ULL << (scope - 6)) : 1;

  Count total = 0;
  std::uint64_t partial = 0;  // flushed before it can overflow
  for (std::uint64_t block = 0; block < blocks; ++block) {
    stack.clear();
    for (const Op& op : prog) {
      switch (op.kind) {
        case NodeKind::True:
          stack.push_back(~0ULL);
          break;
        case NodeKind::False:
          stack.push_back(0);
          break;
        case NodeKind::Var:
          if (op.var <= 6) {
            stack.push_back(kLanePattern[op.var - 1]);
          } else {
            stack.push_back(((block >> (op.var - 7)) & 1U) ? ~0ULL : 0);
          }
          break;
        case NodeKind::Not:
          stack.back() = ~stack.back();
          break;
        case NodeKind::And:
        case NodeKind::Or: {
          const std::uint64_t rhs = stack.back();
          stack.pop_back();
          stack.back() = op.kind == NodeKind::And ? (stack.back() & rhs) : (stack.back() | rhs);
          break;
        }
      }
    }
    partial += static_cast<std::uint64_t>(std::popcount(stack.back() & lanes_mask));
    if (partial > (1ULL << 62)) {
      total += partial;
      partial = 0;
    }
  }
  total += partial;
  return total;
}

// ---------------------------------------------------------------------------
// CircuitStore

std::size_t CircuitStore::KeyHash::operator()(const Key& k) const noexcept {
  std::uint64_t h = static_cast<std::uint64_t>(k.kind) * 0x9E3779B97F4A7C15ULL;
  h ^= (static_cast<std::uint64_t>(k.var) + 0x7F4A7C15ULL) * 0xBF58476D1CE4E5B9ULL;
  h ^= (static_cast<std::uint64_t>(k.left) << 32 | k.right) * 0x94D049BB133111EBULL;
  return static_cast<std::size_t>(h ^ (h >> 31));
}

CircuitStore::CircuitStore() {
  nodes_.push_back({NodeKind::False, 0, 0, 0, {}});
  nodes_.push_back({NodeKind::True, 0, 0, 0, {}});
  counts_.emplace(kFalse, 0);
  counts_.emplace(kTrue, 1);
}

CircuitStore::Id CircuitStore::make(NodeKind kind, std::uint32_t var, Id left, Id right) {
  const Key key{kind, var, left, right};
  if (auto it = unique_.find(key); it != unique_.end()) return it->second;
  Entry e{kind, var, left, right, {}};
  if (kind == NodeKind::Var) {
    e.support = {var};
  } else if (kind == NodeKind::Not) {
    e.support = nodes_[left].support;
  } else {
    const auto& a = nodes_[left].support;
    const auto& b = nodes_[right].support;
    e.support.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(e.support));
  }
  const Id id = static_cast<Id>(nodes_.size());
  nodes_.push_back(std::move(e));
  unique_.emplace(key, id);
  return id;
}

CircuitStore::Id CircuitStore::make_var(std::uint32_t var) { return make(NodeKind::Var, var, 0, 0); }

CircuitStore::Id CircuitStore::make_not(Id a) {
  if (a == kTrue) return kFalse;
  if (a == kFalse) return kTrue;
  if (nodes_[a].kind == NodeKind::Not) return nodes_[a].left;
  return make(NodeKind::Not, 0, a, 0);
}

CircuitStore::Id CircuitStore::make_and(Id a, Id b) {
  if (a == kFalse || b == kFalse) return kFalse;
  if (a == kTrue) return b;
  if (b == kTrue || a == b) return a;
  return make(NodeKind::And, 0, std::min(a, b), std::max(a, b));
}

CircuitStore::Id CircuitStore::make_or(Id a, Id b) {
  if (a == kTrue || b == kTrue) return kTrue;
  if (a == kFalse) return b;
  if (b == kFalse || a == b) return a;
  return make(NodeKind::Or, 0, std::min(a, b), std::max(a, b));
}

CircuitStore::Id CircuitStore::import(const Formula& f) {
  // Post-order over the tree with an explicit stack; shared subtrees are
  // imported once.
  std::unordered_map<const Node*, Id> done;
  std::vector<std::pair<const Node*, bool>> stack{{&f.root(), false}};
  while (!stack.empty()) {
    auto [n, expanded] = stack.back();
    stack.pop_back();
    if (done.count(n)) continue;
    if (!expanded && (n->left || n->right)) {
      stack.push_back({n, true});
      if (n->right) stack.push_back({n->right.get(), false});
      if (n->left) stack.push_back({n->left.get(), false});
      continue;
    }
    Id id = kFalse;
    switch (n->kind) {
      case NodeKind::True:
        id = kTrue;
        break;
      case NodeKind::False:
        id = kFalse;
        break;
      case NodeKind::Var:
        id = make_var(n->var);
        break;
      case NodeKind::Not:
        id = make_not(done.at(n->left.get()));
        break;
      case NodeKind::And:
        id = make_and(done.at(n->left.get()), done.at(n->right.get()));
        break;
      case NodeKind::Or:
        id = make_or(done.at(n->left.get()), done.at(n->right.get()));
        break;
    }
    done.emplace(n, id);
  }
  return done.at(&f.root());
}

CircuitStore::Id CircuitStore::restrict(Id id, std::uint32_t var, bool value) {
  const std::uint64_t key =
      (static_cast<std::uint64_t>(id) << 32) | (static_cast<std::uint64_t>(var) << 1) | value;
  if (auto it = restrict_cache_.find(key); it != restrict_cache_.end()) return it->second;
  std::unordered_map<Id, Id> memo;
  const Id r = restrict_rec(id, var, value, memo);
  restrict_cache_.emplace(key, r);
  return r;
}

CircuitStore::Id CircuitStore::restrict_rec(Id id, std::uint32_t var, bool value,
                                            std::unordered_map<Id, Id>& memo) {
  const auto& sup = nodes_[id].support;
  if (!std::binary_search(sup.begin(), sup.end(), var)) return id;
  if (auto it = memo.find(id); it != memo.end()) return it->second;
  // Copy fields: make() may reallocate nodes_.
  const Entry& e = nodes_[id];
  const NodeKind kind = e.kind;
  const Id left = e.left;
  const Id right = e.right;
  Id r = kFalse;
  switch (kind) {
    case NodeKind::Var:
      r = value ? kTrue : kFalse;
      break;
    case NodeKind::Not:
      r = make_not(restrict_rec(left, var, value, memo));
      break;
    case NodeKind::And: {
      const Id a = restrict_rec(left, var, value, memo);
      r = a == kFalse ? kFalse : make_and(a, restrict_rec(right, var, value, memo));
      break;
    }
    case NodeKind::Or: {
      const Id a = restrict_rec(left, var, value, memo);
      r = a == kTrue ? kTrue : make_or(a, restrict_rec(right, var, value, memo));
      break;
    }
    default:
      r = id;
  }
  memo.emplace(id, r);
  return r;
}

const Count& CircuitStore::count_support(Id id) {
  if (auto it = counts_.find(id); it != counts_.end()) return it->second;
  const std::uint32_t v = nodes_[id].support.front();
  const std::size_t width = nodes_[id].support.size();
  Count total = 0;
  for (bool value : {false, true}) {
    const Id child = restrict(id, v, value);
    const std::size_t free = width - 1 - nodes_[child].support.size();
    total += count_support(child) << free;
  }
  return counts_.emplace(id, std::move(total)).first->second;
}

Count CircuitStore::count_over(Id id, std::uint32_t width) {
  const std::size_t used = nodes_[id].support.size();
  if (used > width) throw ScopeError("residue depends on more variables than the counted block");
  return count_support(id) << (width - used);
}

bool CircuitStore::accumulate(Id id, const Count& weight, Count& acc, const Count& bound) {
  if (auto it = counts_.find(id); it != counts_.end()) {
    acc += it->second * weight;
    return acc >= bound;
  }
  const std::uint32_t v = nodes_[id].support.front();
  const std::size_t width = nodes_[id].support.size();
  const Count start = acc;
  for (bool value : {false, true}) {
    const Id child = restrict(id, v, value);
    const std::size_t free = width - 1 - nodes_[child].support.size();
    if (accumulate(child, weight << free, acc, bound)) return true;
  }
  // Both branches finished: the contribution is exact and can be cached.
  counts_.emplace(id, (acc - start) / weight);
  return false;
}

bool CircuitStore::at_least(Id id, std::uint32_t width, const Count& bound) {
  if (bound <= 0) return true;
  const std::size_t used = nodes_[id].support.size();
  if (used > width) throw ScopeError("residue depends on more variables than the counted block");
  Count acc = 0;
  return accumulate(id, pow2(width - used), acc, bound);
}

// ---------------------------------------------------------------------------

Count count_fast(const Formula& f) {
  CircuitStore store;
  return store.count_over(store.import(f), f.scope());
}

bool threshold_check(const Formula& f, const Count& bound) {
  CircuitStore store;
  return store.at_least(store.import(f), f.scope(), bound);
}

}  // namespace dmaxsat
