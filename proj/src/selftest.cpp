#include "dmaxsat/selftest.hpp"

#include <algorithm>
#include <sstream>

#include "dmaxsat/circuit_io.hpp"
#include "dmaxsat/count.hpp"
#include "dmaxsat/gadgets.hpp"
#include "dmaxsat/generate.hpp"
#include "dmaxsat/reduction.hpp"
#include "dmaxsat/solver.hpp"

namespace dmaxsat {

Formula corrupted_pack_pair(const Formula& f, const Formula& g) {
  const std::uint32_t m = f.scope();
  const std::uint32_t n = g.scope();
  const std::uint32_t width = m + n + 1;
  std::vector<Formula> low{f.with_scope(width)};
  for (std::uint32_t i = m + 1; i <= m + n; ++i) low.push_back(!Formula::var(i, width));
  return conjunction(low) || (shift(g, m) && Formula::var(width, width));
}

bool SelftestReport::passed() const {
  for (const auto& s : suites) {
    if (s.failures) return false;
  }
  return true;
}

std::string SelftestReport::text() const {
  std::ostringstream out;
  std::size_t ok = 0;
  for (const auto& s : suites) {
    out << s.name << ": " << s.cases << " cases, " << s.failures << " failures\n";
    if (!s.counterexample.empty()) out << s.counterexample;
    if (!s.failures) ++ok;
  }
  out << "selftest: " << (passed() ? "PASS" : "FAIL") << " (" << ok << "/" << suites.size()
      << " suites)\n";
  return out.str();
}

namespace {

using Operands = std::vector<Formula>;
// Returns a description of the violation, or nothing when the case holds.
using Check = std::function<std::optional<std::string>(const Operands&)>;

std::optional<std::string> guarded(const Check& check, const Operands& ops) {
  try {
    return check(ops);
  } catch (const std::exception& e) {
    return std::string("exception: ") + e.what();
  }
}

Operands shrink(Operands ops, const Check& check) {
  for (int round = 0; round < 500; ++round) {
    bool progress = false;
    for (std::size_t i = 0; i < ops.size() && !progress; ++i) {
      for (auto& candidate : one_step_shrinks(ops[i])) {
        Operands trial = ops;
        trial[i] = std::move(candidate);
        if (guarded(check, trial)) {
          ops = std::move(trial);
          progress = true;
          break;
        }
      }
    }
    if (!progress) break;
  }
  return ops;
}

class Suite {
 public:
  Suite(std::string name, std::uint64_t default_cases, const SelftestOptions& options)
      : cap_(options.budget.value_or(default_cases)) {
    result_.name = std::move(name);
  }

  bool more() const { return result_.cases < cap_; }

  void run(const Operands& ops, const Check& check, const std::string& params = {}) {
    ++result_.cases;
    if (!guarded(check, ops)) return;
    if (result_.failures++) return;
    Operands small = shrink(ops, check);
    std::ostringstream out;
    out << "  counterexample" << (params.empty() ? "" : " (" + params + ")") << ":\n";
    for (std::size_t i = 0; i < small.size(); ++i) {
      std::string text = print_circuit(small[i]);
      text.pop_back();
      std::replace(text.begin(), text.end(), '\n', ' ');
      out << "  operand " << i << ": " << text << "\n";
    }
    out << "  " << guarded(check, small).value_or("no longer fails after shrinking") << "\n";
    result_.counterexample = out.str();
  }

  SuiteResult finish() { return std::move(result_); }

 private:
  std::uint64_t cap_;
  SuiteResult result_;
};

std::string mismatch(const std::string& what, const Count& expected, const Count& actual) {
  return what + ": expected " + to_string(expected) + ", actual " + to_string(actual);
}

std::size_t less_than_size(std::uint32_t n, const Count& c) { return c == pow2(n) ? 0 : 2 * n; }

SuiteResult pair_law(const SelftestOptions& o, Rng rng) {
  const PairPacker pack = o.pack_pair_impl ? o.pack_pair_impl : PairPacker(pack_pair);
  Suite suite("pair_law", 500, o);
  while (suite.more()) {
    const auto m = static_cast<std::uint32_t>(draw(rng, 7));
    const auto n = static_cast<std::uint32_t>(draw(rng, std::min<std::uint32_t>(7, 12 - m)));
    Operands ops{random_formula(rng, m), random_formula(rng, n)};
    suite.run(ops, [&](const Operands& fg) -> std::optional<std::string> {
      const Formula packed = pack(fg[0], fg[1]);
      const Count expected = count_bruteforce(fg[0]) + (count_bruteforce(fg[1]) << fg[0].scope());
      const Count actual = count_bruteforce(packed);
      if (actual != expected) return mismatch("count", expected, actual);
      const std::size_t want = size(fg[0]) + size(fg[1]) + 2 * fg[1].scope() + 4;
      if (size(packed) != want) return mismatch("size", want, size(packed));
      return std::nullopt;
    });
  }
  return suite.finish();
}

SuiteResult digit_law(const SelftestOptions& o, Rng rng) {
  Suite suite("digit_law", 200, o);
  while (suite.more()) {
    const auto k = static_cast<std::uint32_t>(draw(rng, 3)) + 1;
    const auto n = static_cast<std::uint32_t>(draw(rng, 3));
    Operands ops;
    for (std::uint32_t i = 0; i < k; ++i) ops.push_back(random_formula(rng, n));
    suite.run(ops, [&](const Operands& fs) -> std::optional<std::string> {
      const PackedFormula packed = pack_many(fs);
      const auto digits = unpack_digits(count_bruteforce(packed.formula), n, k);
      std::size_t want_size = 2 + (k - 1) * (2 * n + 4);
      for (std::uint32_t i = 0; i < k; ++i) {
        const Count expected = count_bruteforce(fs[i]);
        if (digits[i] != expected) return mismatch("digit " + std::to_string(i), expected, digits[i]);
        want_size += size(fs[i]);
      }
      if (size(packed.formula) != want_size) return mismatch("size", want_size, size(packed.formula));
      return std::nullopt;
    });
  }
  return suite.finish();
}

SuiteResult threshold_law(const SelftestOptions& o) {
  Suite suite("threshold_law", ~0ULL, o);
  for (std::uint32_t n = 0; n <= 6; ++n) {
    for (std::uint64_t c = 0; c <= (1ULL << n) && suite.more(); ++c) {
      suite.run({}, [&](const Operands&) -> std::optional<std::string> {
        const Formula m = less_than_const(n, c);
        const Count actual = count_bruteforce(m);
        if (actual != c) return mismatch("count", c, actual);
        if (size(m) > 3 * n) return mismatch("size bound 3n", 3 * n, size(m));
        return std::nullopt;
      }, "n=" + std::to_string(n) + " c=" + std::to_string(c));
    }
  }
  return suite.finish();
}

SuiteResult psi_law(const SelftestOptions& o, Rng rng) {
  Suite suite("psi_law", 1200, o);
  while (suite.more()) {
    const auto n = static_cast<std::uint32_t>(draw(rng, 5)) + 1;
    const Formula f = random_formula(rng, n);
    for (std::uint64_t delta = 0; delta <= (1ULL << (n - 1)) && suite.more(); ++delta) {
      suite.run({f}, [&](const Operands& ops) -> std::optional<std::string> {
        const Formula psi = psi_gadget(ops[0], delta);
        const Count expected = k_value(n, delta, count_bruteforce(ops[0]));
        const Count actual = count_bruteforce(psi);
        if (actual != expected) return mismatch("count", expected, actual);
        const std::size_t want = 2 * size(ops[0]) + less_than_size(n, 2 * delta) + 6;
        if (size(psi) != want) return mismatch("size", want, size(psi));
        return std::nullopt;
      }, "delta=" + std::to_string(delta));
    }
  }
  return suite.finish();
}

SuiteResult apex_law(const SelftestOptions& o) {
  Suite suite("apex_law", ~0ULL, o);
  for (std::uint32_t n = 1; n <= 5; ++n) {
    for (std::uint64_t delta = 0; delta <= (1ULL << (n - 1)); ++delta) {
      const Count apex = k_value(n, delta, (1ULL << (n - 1)) + delta);
      for (std::uint64_t x = 0; x <= (1ULL << n) && suite.more(); ++x) {
        suite.run({}, [&](const Operands&) -> std::optional<std::string> {
          const bool reaches = k_value(n, delta, x) >= apex;
          const bool at_apex = x == (1ULL << (n - 1)) + delta;
          if (reaches != at_apex) return std::string("K(X) >= K(apex) disagrees with X == apex");
          return std::nullopt;
        }, "n=" + std::to_string(n) + " delta=" + std::to_string(delta) + " X=" + std::to_string(x));
      }
    }
  }
  return suite.finish();
}

std::optional<std::string> check_eq_to_geq(const Formula& h, const Count& y) {
  const EqToGeq r = eq_to_geq(h, y);
  const bool truth = count_bruteforce(h) == y;
  const Count g = count_bruteforce(r.query.formula);
  if ((g >= r.query.bound) != truth) {
    return "y=" + to_string(y) + ": brute-force threshold answer should be " + (truth ? "yes" : "no");
  }
  if (verify_threshold(r.query) != truth) {
    return "y=" + to_string(y) + ": verify_threshold disagrees with brute force";
  }
  if (g > r.query.bound) return "y=" + to_string(y) + ": " + mismatch("apex bound", r.query.bound, g);
  const std::size_t operand = size(h) + (r.branch == Branch::Lower ? 1 : 0);
  const std::size_t want = 2 * operand + less_than_size(h.scope(), 2 * r.delta) + 6;
  if (size(r.query.formula) != want) return mismatch("size", want, size(r.query.formula));
  return std::nullopt;
}

SuiteResult eq_to_geq_suite(const SelftestOptions& o, Rng rng) {
  Suite suite("eq_to_geq", 120, o);
  while (suite.more()) {
    const auto n = static_cast<std::uint32_t>(draw(rng, 4)) + 1;
    suite.run({random_formula(rng, n)}, [&](const Operands& ops) -> std::optional<std::string> {
      for (std::uint64_t y = 0; y <= (1ULL << n); ++y) {
        if (auto bad = check_eq_to_geq(ops[0], y)) return bad;
      }
      return std::nullopt;
    });
  }
  return suite.finish();
}

SuiteResult combine_suite(const SelftestOptions& o, Rng rng) {
  Suite suite("combine", 60, o);
  while (suite.more()) {
    const auto k = static_cast<std::uint32_t>(draw(rng, 2)) + 1;
    const auto n = static_cast<std::uint32_t>(draw(rng, 2)) + 1;
    Operands ops;
    for (std::uint32_t i = 0; i < k; ++i) ops.push_back(random_formula(rng, n));
    suite.run(ops, [&](const Operands& fs) -> std::optional<std::string> {
      std::vector<Count> truth;
      for (const auto& f : fs) truth.push_back(count_bruteforce(f));
      std::vector<std::vector<Count>> vectors{truth};
      for (std::uint32_t i = 0; i < k; ++i) {
        for (std::uint64_t v = 0; v <= (1ULL << n); ++v) {
          if (v == truth[i]) continue;
          vectors.push_back(truth);
          vectors.back()[i] = v;
        }
      }
      for (const auto& claims : vectors) {
        std::vector<EqualityQuery> qs;
        std::string label;
        for (std::uint32_t i = 0; i < k; ++i) {
          qs.push_back({fs[i], claims[i]});
          label += (i ? "," : "") + to_string(claims[i]);
        }
        const bool expected = claims == truth;
        const CombinedQuery c = combine_equalities(qs);
        const ThresholdQuery& q = c.threshold.query;
        const bool brute = count_bruteforce(q.formula) >= q.bound;
        if (brute != expected) return "claims [" + label + "]: brute-force threshold answer wrong";
        if (verify_threshold(q) != expected) return "claims [" + label + "]: verify_threshold wrong";
        std::size_t packed_size = 2 + (k - 1) * (2 * n + 4);
        for (const auto& f : fs) packed_size += size(f);
        const std::size_t operand = packed_size + (c.threshold.branch == Branch::Lower ? 1 : 0);
        const std::size_t want = 2 * operand + less_than_size(k * (n + 1), 2 * c.threshold.delta) + 6;
        if (size(q.formula) != want) return mismatch("size", want, size(q.formula));
      }
      return std::nullopt;
    });
  }
  return suite.finish();
}

SuiteResult solver_suite(const SelftestOptions& o, Rng rng) {
  Suite suite("solver", 1000, o);
  while (suite.more()) {
    const auto xw = static_cast<std::uint32_t>(draw(rng, 6));
    const auto yw = static_cast<std::uint32_t>(draw(rng, 6));
    const SplitInstance base = random_split_instance(rng, xw, yw);
    const auto bound_pick = draw(rng, (1ULL << yw) + 2);
    suite.run({base.formula()}, [&](const Operands& ops) -> std::optional<std::string> {
      const SplitInstance inst(ops[0], base.x_vars(), base.y_vars());
      // Table of y-counts per chooser assignment, by direct evaluation.
      std::vector<std::uint64_t> per_x(1ULL << xw, 0);
      for (std::uint64_t u = 0; u < per_x.size(); ++u) {
        for (std::uint64_t w = 0; w < (1ULL << yw); ++w) {
          Assignment a(inst.formula().scope());
          for (std::uint32_t j = 0; j < xw; ++j) a.set(VarId(inst.x_vars()[j]), (u >> (xw - 1 - j)) & 1U);
          for (std::uint32_t j = 0; j < yw; ++j) a.set(VarId(inst.y_vars()[j]), (w >> j) & 1U);
          per_x[u] += evaluate(inst.formula(), a);
        }
      }
      std::uint64_t best_u = 0;
      for (std::uint64_t u = 1; u < per_x.size(); ++u) {
        if (per_x[u] > per_x[best_u]) best_u = u;
      }
      const Witness best = max_count(inst);
      if (best.achieved != per_x[best_u]) return mismatch("max_count", per_x[best_u], best.achieved);
      std::uint64_t got_u = 0;
      for (bool b : best.x_values) got_u = got_u << 1 | b;
      if (got_u != best_u) return "max_count tie-break picked " + format_assignment(inst, best.x_values);

      for (std::uint64_t bound : {bound_pick, per_x[best_u], per_x[best_u] + 1}) {
        if (bound > (1ULL << yw) + 1) continue;
        const SplitInstance decided = inst.with_bound(bound);
        const auto plain = dmax_decide(decided);
        const auto pruned = dmax_pruned(decided);
        std::optional<std::uint64_t> want;
        for (std::uint64_t u = 0; u < per_x.size() && !want; ++u) {
          if (per_x[u] >= bound) want = u;
        }
        if (plain.has_value() != want.has_value()) return "B=" + std::to_string(bound) + ": dmax_decide answer wrong";
        if (plain != pruned) return "B=" + std::to_string(bound) + ": dmax_pruned differs from dmax_decide";
        if (plain && count_given_x(inst, plain->x_values) != plain->achieved) {
          return "B=" + std::to_string(bound) + ": witness count does not recompute";
        }
        if (plain && plain->achieved != per_x[*want]) return "B=" + std::to_string(bound) + ": witness not lexicographically least";
      }
      return std::nullopt;
    }, "x=" + format_assignment(base, std::vector<bool>(xw)) + " B=" + std::to_string(bound_pick));
  }
  return suite.finish();
}

SuiteResult counter_suite(const SelftestOptions& o, Rng rng) {
  Suite suite("counter", 10000, o);
  while (suite.more()) {
    const auto n = static_cast<std::uint32_t>(draw(rng, 11));
    suite.run({random_formula(rng, n, 6)}, [&](const Operands& ops) -> std::optional<std::string> {
      const Count expected = count_bruteforce(ops[0]);
      const Count fast = count_fast(ops[0]);
      if (fast != expected) return mismatch("count_fast", expected, fast);
      if (!threshold_check(ops[0], expected) || threshold_check(ops[0], expected + 1)) {
        return "threshold_check disagrees at the exact count " + to_string(expected);
      }
      return std::nullopt;
    });
  }
  return suite.finish();
}

}  // namespace

SelftestReport run_selftest(const SelftestOptions& options) {
  auto stream = [&](std::uint64_t i) { return Rng(options.seed * 0x9E3779B97F4A7C15ULL + i); };
  SelftestReport report;
  report.suites.push_back(pair_law(options, stream(1)));
  report.suites.push_back(digit_law(options, stream(2)));
  report.suites.push_back(threshold_law(options));
  report.suites.push_back(psi_law(options, stream(4)));
  report.suites.push_back(apex_law(options));
  report.suites.push_back(eq_to_geq_suite(options, stream(6)));
  report.suites.push_back(combine_suite(options, stream(7)));
  report.suites.push_back(solver_suite(options, stream(8)));
  report.suites.push_back(counter_suite(options, stream(9)));
  return report;
}

}  // namespace dmaxsat
