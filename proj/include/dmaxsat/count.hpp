#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "dmaxsat/formula.hpp"

namespace dmaxsat {

/// Arbitrary-precision nonnegative model count.
using Count = boost::multiprecision::cpp_int;

Count pow2(std::uint64_t exponent);
Count parse_count(const std::string& decimal);
std::string to_string(const Count& c);

inline constexpr std::uint32_t kDefaultBruteforceLimit = 24;

/// Counts by enumerating all 2^scope assignments. Serves as the ground truth
/// for every other counting path. Throws LimitError above `limit` variables.
Count count_bruteforce(const Formula& f, std::uint32_t limit = kDefaultBruteforceLimit);

/// Exact count by splitting on the lowest-indexed free variable with
/// constant propagation and residue memoization.
Count count_fast(const Formula& f);

/// count_fast(f) >= bound, stopping as soon as the running count reaches it.
bool threshold_check(const Formula& f, const Count& bound);

/// Hash-consed circuit with cached restrictions and counts. Residues that
/// arise under different partial assignments but are structurally identical
/// share one node and one cached count.
///
/// Not thread-safe; use one store per thread.
class CircuitStore {
 public:
  using Id = std::uint32_t;

  CircuitStore();

  Id import(const Formula& f);

  /// The residue of `id` with variable `var` fixed to `value`.
  Id restrict(Id id, std::uint32_t var, bool value);

  /// Sorted variables the residue still depends on syntactically.
  const std::vector<std::uint32_t>& support(Id id) const { return nodes_[id].support; }

  bool is_false(Id id) const { return id == kFalse; }
  bool is_true(Id id) const { return id == kTrue; }

  /// Models of `id` over exactly its support variables.
  const Count& count_support(Id id);

  /// Models of `id` over a block of `width` variables containing its support.
  Count count_over(Id id, std::uint32_t width);

  /// Whether models of `id` over `width` variables reach `bound`; explores
  /// branches only until the answer is settled.
  bool at_least(Id id, std::uint32_t width, const Count& bound);

  std::size_t node_count() const { return nodes_.size(); }

  static constexpr Id kFalse = 0;
  static constexpr Id kTrue = 1;

 private:
  struct Entry {
    NodeKind kind;
    std::uint32_t var;
    Id left;
    Id right;
    std::vector<std::uint32_t> support;
  };

  struct Key {
    NodeKind kind;
    std::uint32_t var;
    Id left;
    Id right;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept;
  };

  Id make(NodeKind kind, std::uint32_t var, Id left, Id right);
  Id make_var(std::uint32_t var);
  Id make_not(Id a);
  Id make_and(Id a, Id b);
  Id make_or(Id a, Id b);
  Id restrict_rec(Id id, std::uint32_t var, bool value,
                  std::unordered_map<Id, Id>& memo);
  bool accumulate(Id id, const Count& weight, Count& acc, const Count& bound);

  std::vector<Entry> nodes_;
  std::unordered_map<Key, Id, KeyHash> unique_;
  std::unordered_map<std::uint64_t, Id> restrict_cache_;
  std::unordered_map<Id, Count> counts_;
};

}  // namespace dmaxsat
