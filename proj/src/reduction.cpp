#include "dmaxsat/reduction.hpp"

#include <json.hpp>

#include "dmaxsat/gadgets.hpp"

namespace dmaxsat {

const char* to_string(Branch b) { return b == Branch::Upper ? "upper" : "lower"; }

EqToGeq eq_to_geq(const Formula& h, const Count& y) {
  const std::uint32_t n = h.scope();
  if (n == 0) throw RangeError("eq_to_geq: formula scope must be at least 1");
  const Count full = pow2(n);
  if (y < 0 || y > full) {
    throw RangeError("eq_to_geq: claimed count " + to_string(y) + " outside [0, 2^" +
                     std::to_string(n) + "]");
  }
  const Count half = pow2(n - 1);
  if (y >= half) {
    const Count delta = y - half;
    return {{psi_gadget(h, delta), k_value(n, delta, y)}, n, y, delta, Branch::Upper};
  }
  // #¬h = 2^n - #h, so #¬h = 2^(n-1) + delta iff #h = y.
  const Count delta = half - y;
  return {{psi_gadget(!h, delta), k_value(n, delta, full - y)}, n, y, delta, Branch::Lower};
}

CombinedQuery combine_equalities(const std::vector<EqualityQuery>& qs) {
  if (qs.empty()) throw ArityError("combine_equalities needs at least one query");
  const std::uint32_t n = qs.front().formula.scope();
  std::vector<Formula> operands;
  std::vector<Count> claims;
  for (std::size_t i = 0; i < qs.size(); ++i) {
    const auto& q = qs[i];
    if (q.formula.scope() != n) {
      throw ArityError("query " + std::to_string(i) + " has scope " +
                       std::to_string(q.formula.scope()) + ", expected " + std::to_string(n));
    }
    if (q.claimed < 0 || q.claimed > pow2(n)) {
      throw RangeError("query " + std::to_string(i) + ": claimed count " + to_string(q.claimed) +
                       " outside [0, 2^" + std::to_string(n) + "]");
    }
    operands.push_back(q.formula);
    claims.push_back(q.claimed);
  }
  PackedFormula packed = pack_many(operands);
  Count y = 0;
  for (std::size_t i = claims.size(); i-- > 0;) {
    y <<= (n + 1);
    y += claims[i];
  }
  EqToGeq threshold = eq_to_geq(packed.formula, y);
  return {std::move(packed.formula), n, std::move(claims), std::move(y), std::move(threshold)};
}

bool verify_threshold(const ThresholdQuery& q) { return threshold_check(q.formula, q.bound); }

namespace {

nlohmann::json step_json(const EqToGeq& r) {
  return {{"step", "eq_to_geq"},
          {"n", r.n},
          {"Y", to_string(r.y)},
          {"delta", to_string(r.delta)},
          {"branch", to_string(r.branch)},
          {"B", to_string(r.query.bound)},
          {"scope", r.query.formula.scope()},
          {"size", size(r.query.formula)}};
}

}  // namespace

std::string audit_jsonl(const EqToGeq& r) { return step_json(r).dump() + "\n"; }

std::string audit_jsonl(const CombinedQuery& r) {
  nlohmann::json digits = nlohmann::json::array();
  for (const auto& d : r.claims) digits.push_back(to_string(d));
  nlohmann::json pack = {{"step", "pack"},
                         {"k", r.claims.size()},
                         {"n", r.digit_width},
                         {"digits", digits},
                         {"Y", to_string(r.y)},
                         {"scope", r.packed.scope()},
                         {"size", size(r.packed)}};
  return pack.dump() + "\n" + step_json(r.threshold).dump() + "\n";
}

}  // namespace dmaxsat
