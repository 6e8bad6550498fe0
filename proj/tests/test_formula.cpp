#include <doctest.h>

#include "dmaxsat/formula.hpp"
#include "dmaxsat/generate.hpp"

using namespace dmaxsat;

namespace {
Formula x(std::uint32_t i) { return Formula::var(i); }
}  // namespace

TEST_CASE("evaluate follows the truth table") {
  CHECK(evaluate((x(1) && x(2)).with_scope(2), Assignment({true, true})));
  CHECK_FALSE(evaluate((x(1) && !x(1)).with_scope(1), Assignment({true})));
  CHECK(evaluate((x(1) || x(2)).with_scope(3), Assignment({false, true, false})));
}

TEST_CASE("evaluate rejects an assignment of the wrong length") {
  CHECK_THROWS_AS(evaluate(x(1).with_scope(2), Assignment({true})), ScopeError);
}

TEST_CASE("size counts operators only") {
  CHECK(size(x(1)) == 0);
  CHECK(size(!x(1)) == 1);
  CHECK(size((x(1) || !x(2)) && x(3)) == 3);
  CHECK(size(Formula::constant(true, 4)) == 0);
}

TEST_CASE("shift relocates indices and grows scope") {
  CHECK(shift(x(1).with_scope(1), 2) == x(3).with_scope(3));
  CHECK(shift((x(1) || x(2)).with_scope(2), 0) == (x(1) || x(2)).with_scope(2));
  CHECK(shift((!x(2)).with_scope(2), 3) == (!x(5)).with_scope(5));
}

TEST_CASE("scope is explicit and may exceed the used variables") {
  const Formula f = x(1).with_scope(10);
  CHECK(f.scope() == 10);
  CHECK(f.max_var() == 1);
  CHECK_THROWS_AS((x(1) && x(4)).with_scope(3), ScopeError);
  CHECK_THROWS_AS(Formula::var(0), ScopeError);
}

TEST_CASE("composition takes the widest operand scope") {
  CHECK((x(1).with_scope(3) && x(2)).scope() == 3);
  CHECK((!x(7)).scope() == 7);
}

TEST_CASE("conjunction and disjunction fold right") {
  const Formula folded = conjunction({x(1), x(2), x(3)});
  CHECK(folded == (x(1) && (x(2) && x(3))));
  CHECK(disjunction({x(2)}) == x(2));
  CHECK_THROWS_AS(conjunction({}), ArityError);
}

TEST_CASE("property: size composes additively and shift preserves it") {
  Rng rng(7);
  for (int i = 0; i < 300; ++i) {
    const Formula f = random_formula(rng, 4);
    const Formula g = random_formula(rng, 3);
    CHECK(size(f && g) == size(f) + size(g) + 1);
    CHECK(size(f || g) == size(f) + size(g) + 1);
    CHECK(size(!f) == size(f) + 1);
    const Formula s = shift(f, 5);
    CHECK(size(s) == size(f));
    CHECK(s.scope() == f.scope() + 5);
  }
}

TEST_CASE("property: evaluate agrees with a hand-rolled truth table") {
  // Independent recursive reading of the node structure.
  struct Table {
    static bool eval(const Node& n, std::uint64_t bits) {
      switch (n.kind) {
        case NodeKind::True: return true;
        case NodeKind::False: return false;
        case NodeKind::Var: return (bits >> (n.var - 1)) & 1U;
        case NodeKind::Not: return !eval(*n.left, bits);
        case NodeKind::And: return eval(*n.left, bits) && eval(*n.right, bits);
        case NodeKind::Or: return eval(*n.left, bits) || eval(*n.right, bits);
      }
      return false;
    }
  };
  Rng rng(11);
  for (int i = 0; i < 500; ++i) {
    const auto n = static_cast<std::uint32_t>(draw(rng, 5));
    const Formula f = random_formula(rng, n);
    for (std::uint64_t bits = 0; bits < (1ULL << n); ++bits) {
      REQUIRE(evaluate(f, Assignment::from_bits(bits, n)) == Table::eval(f.root(), bits));
    }
  }
}

TEST_CASE("shrinks replace exactly one node") {
  const Formula f = (x(1) && !x(2)).with_scope(2);
  const auto candidates = one_step_shrinks(f);
  CHECK_FALSE(candidates.empty());
  for (const auto& c : candidates) {
    CHECK(c.scope() == 2);
    CHECK(size(c) <= size(f));
    CHECK_FALSE(c == f);
  }
}
