#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dmaxsat/count.hpp"
#include "dmaxsat/formula.hpp"

namespace dmaxsat {

/// Claim "#formula = claimed".
struct EqualityQuery {
  Formula formula;
  Count claimed;
};

/// Test "#formula >= bound".
struct ThresholdQuery {
  Formula formula;
  Count bound;
};

enum class Branch { Upper, Lower };

const char* to_string(Branch b);

/// Result of turning "#h = y" into a threshold query, with the values the
/// construction went through.
struct EqToGeq {
  ThresholdQuery query;
  std::uint32_t n;  // scope of h
  Count y;
  Count delta;
  Branch branch;  // Upper: y >= 2^(n-1), gadget over h; Lower: gadget over ¬h
};

/// #query.formula >= query.bound iff #h = y, and #query.formula <= query.bound
/// always. Requires h.scope() >= 1 and 0 <= y <= 2^n.
EqToGeq eq_to_geq(const Formula& h, const Count& y);

struct CombinedQuery {
  Formula packed;               // digit-packed operands
  std::uint32_t digit_width;    // n
  std::vector<Count> claims;    // digits of y, least significant first
  Count y;                      // sum_i claims[i] * 2^(i(n+1))
  EqToGeq threshold;
};

/// Collapses k equality claims over a common scope n into one threshold
/// query that holds iff every claim is true. Claims above 2^n are rejected.
CombinedQuery combine_equalities(const std::vector<EqualityQuery>& qs);

/// Decides the threshold query with the pruning counter.
bool verify_threshold(const ThresholdQuery& q);

/// One JSON object per line describing each construction step.
std::string audit_jsonl(const EqToGeq& r);
std::string audit_jsonl(const CombinedQuery& r);

}  // namespace dmaxsat
