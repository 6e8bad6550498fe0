#include <doctest.h>

#include "dmaxsat/generate.hpp"
#include "dmaxsat/solver.hpp"

using namespace dmaxsat;

namespace {
Formula x(std::uint32_t i) { return Formula::var(i); }
// x1 chooses, x2 x3 are counted: (x1 ∧ y1) ∨ (¬x1 ∧ y1 ∧ y2).
const Formula kSplit3 = ((x(1) && x(2)) || (!x(1) && (x(2) && x(3)))).with_scope(3);
const Formula kOr2 = (x(1) || x(2)).with_scope(2);
}  // namespace

TEST_CASE("count_given_x") {
  const SplitInstance or2(kOr2, {1}, {2});
  CHECK(count_given_x(or2, {true}) == 2);
  CHECK(count_given_x(or2, {false}) == 1);
  const SplitInstance split(kSplit3, {1}, {2, 3});
  CHECK(count_given_x(split, {true}) == 2);
  CHECK(count_given_x(split, {false}) == 1);
  const SplitInstance never(Formula::constant(false, 2), {1}, {2});
  CHECK(count_given_x(never, {true}) == 0);
  CHECK_THROWS_AS(count_given_x(or2, {true, false}), ScopeError);
}

TEST_CASE("dmax_decide examples") {
  const SplitInstance or2(kOr2, {1}, {2});
  auto w = dmax_decide(or2.with_bound(2));
  REQUIRE(w);
  CHECK(w->x_values == std::vector<bool>{true});
  CHECK(w->achieved == 2);
  CHECK_FALSE(dmax_decide(or2.with_bound(3)));

  auto s = dmax_decide(SplitInstance(kSplit3, {1}, {2, 3}, Count(2)));
  REQUIRE(s);
  CHECK(s->x_values == std::vector<bool>{true});
}

TEST_CASE("max_count examples") {
  const Witness a = max_count(SplitInstance(kOr2, {1}, {2}));
  CHECK(a.x_values == std::vector<bool>{true});
  CHECK(a.achieved == 2);

  const Witness t = max_count(SplitInstance(Formula::constant(true, 5), {1, 2}, {3, 4, 5}));
  CHECK(t.x_values == std::vector<bool>{false, false});
  CHECK(t.achieved == 8);

  const Witness s = max_count(SplitInstance(kSplit3, {1}, {2, 3}));
  CHECK(s.x_values == std::vector<bool>{true});
  CHECK(s.achieved == 2);
}

TEST_CASE("dmax_pruned edge cases") {
  const SplitInstance t(Formula::constant(true, 4), {1, 2}, {3, 4}, Count(0));
  auto w = dmax_pruned(t);
  REQUIRE(w);
  CHECK(w->x_values == std::vector<bool>{false, false});
  CHECK_FALSE(dmax_pruned(SplitInstance(Formula::constant(false, 4), {1, 2}, {3, 4}, Count(1))));
  CHECK_FALSE(dmax_decide(SplitInstance(Formula::constant(false, 4), {1, 2}, {3, 4}, Count(1))));
}

TEST_CASE("no chooser variables") {
  const SplitInstance inst(kOr2, {}, {1, 2}, Count(3));
  auto w = dmax_pruned(inst);
  REQUIRE(w);
  CHECK(w->x_values.empty());
  CHECK(w->achieved == 3);
  CHECK(max_count(inst).achieved == 3);
}

TEST_CASE("instance validation") {
  CHECK_THROWS_AS(SplitInstance(kOr2, {1}, {1, 2}), ScopeError);
  CHECK_THROWS_AS(SplitInstance(kOr2, {1}, {}), ScopeError);
  CHECK_THROWS_AS(SplitInstance(kOr2, {3}, {1, 2}), ScopeError);
  CHECK_THROWS_AS(SplitInstance(kOr2, {1}, {2}, Count(4)), RangeError);
  CHECK_NOTHROW(SplitInstance(kOr2, {1}, {2}, Count(3)));
  CHECK_THROWS_AS(dmax_decide(SplitInstance(kOr2, {1}, {2})), RangeError);
  CHECK_THROWS_AS(max_count(SplitInstance(kOr2, {1, 2}, {}), 1), LimitError);
}

TEST_CASE("block declarations") {
  const Formula f = Formula::constant(true, 5);
  const SplitInstance a = SplitInstance::from_blocks(f, "x: 3 1 / y: 2 4 5");
  CHECK(a.x_vars() == std::vector<std::uint32_t>{3, 1});
  CHECK(a.y_vars() == std::vector<std::uint32_t>{2, 4, 5});
  const SplitInstance b = SplitInstance::from_blocks(f, "x:4");
  CHECK(b.x_vars() == std::vector<std::uint32_t>{4});
  CHECK(b.y_vars() == std::vector<std::uint32_t>{1, 2, 3, 5});
  const SplitInstance c = SplitInstance::from_blocks(f, "y: 5 / x: 2");
  CHECK(c.y_vars() == std::vector<std::uint32_t>{5, 1, 3, 4});
  CHECK(SplitInstance::from_blocks(f, "").x_vars().empty());
  CHECK_THROWS_AS(SplitInstance::from_blocks(f, "x: 1 / y: 1"), ScopeError);
  CHECK_THROWS_AS(SplitInstance::from_blocks(f, "x: 1 1"), ScopeError);
  CHECK_THROWS_AS(SplitInstance::from_blocks(f, "x: 6"), ScopeError);
  CHECK_THROWS_AS(SplitInstance::from_blocks(f, "z: 1"), ScopeError);
  CHECK_THROWS_AS(SplitInstance::from_blocks(f, "x 1"), ScopeError);
  CHECK_THROWS_AS(SplitInstance::from_blocks(f, "x: 1a"), ScopeError);
  CHECK_THROWS_AS(SplitInstance::from_blocks(f, "x: 1 / x: 2"), ScopeError);
}

TEST_CASE("witness formatting follows block order") {
  const SplitInstance inst = SplitInstance::from_blocks(Formula::constant(true, 3), "x: 3 1");
  CHECK(format_assignment(inst, {true, false}) == "x3=1 x1=0");
}

TEST_CASE("property: pruned and plain engines agree, decision matches optimum") {
  Rng rng(41);
  for (int i = 0; i < 300; ++i) {
    const auto xw = static_cast<std::uint32_t>(draw(rng, 6));
    const auto yw = static_cast<std::uint32_t>(draw(rng, 6));
    const SplitInstance inst = random_split_instance(rng, xw, yw);
    const Witness best = max_count(inst);
    CHECK(count_given_x(inst, best.x_values) == best.achieved);
    for (std::uint64_t b = 0; b <= (1ULL << yw) + 1; ++b) {
      const SplitInstance with_b = inst.with_bound(b);
      const auto plain = dmax_decide(with_b);
      REQUIRE(plain == dmax_pruned(with_b));
      REQUIRE(plain.has_value() == (b <= best.achieved));
      if (plain) {
        REQUIRE(plain->achieved >= b);
        REQUIRE(count_given_x(inst, plain->x_values) == plain->achieved);
      }
    }
    const auto at_max = dmax_decide(inst.with_bound(best.achieved));
    REQUIRE(at_max);
    CHECK(*at_max == best);
  }
}
