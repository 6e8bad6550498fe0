#include <doctest.h>

#include "dmaxsat/count.hpp"
#include "dmaxsat/gadgets.hpp"
#include "dmaxsat/generate.hpp"
#include "oracle.hpp"

using namespace dmaxsat;

namespace {
Formula x(std::uint32_t i) { return Formula::var(i); }
}  // namespace

TEST_CASE("brute-force counts") {
  CHECK(count_bruteforce(Formula::constant(true, 3)) == 8);
  CHECK(count_bruteforce((x(1) && !x(1)).with_scope(5)) == 0);
  CHECK(count_bruteforce((x(1) || x(2)).with_scope(2)) == 3);
  CHECK(count_bruteforce(Formula::constant(true, 0)) == 1);
  CHECK(count_bruteforce(Formula::constant(false, 0)) == 0);
}

TEST_CASE("brute force refuses scopes above its limit") {
  CHECK_THROWS_AS(count_bruteforce(x(1).with_scope(25)), LimitError);
  CHECK_THROWS_AS(count_bruteforce(x(1).with_scope(9), 8), LimitError);
  CHECK(count_bruteforce(x(1).with_scope(9), 9) == 256);
}

TEST_CASE("fast counts") {
  CHECK(count_fast(((x(1) || x(2)) && (!x(1) || x(3))).with_scope(3)) == 4);
  CHECK(count_fast(x(1).with_scope(10)) == 512);
  CHECK(count_fast(less_than_const(3, 5)) == 5);
  CHECK(count_fast(Formula::constant(false, 4)) == 0);
}

TEST_CASE("fast counting works far beyond the brute-force limit") {
  // x1 over 200 variables: 2^199 models, needs arbitrary precision.
  CHECK(count_fast(x(1).with_scope(200)) == pow2(199));
  CHECK(count_fast((x(1) && x(100)).with_scope(100)) == pow2(98));
}

TEST_CASE("threshold checks") {
  const Formula f = (x(1) || x(2)).with_scope(2);
  CHECK(threshold_check(f, 3));
  CHECK_FALSE(threshold_check(f, 4));
  CHECK(threshold_check(Formula::constant(false, 3), 0));
  CHECK(threshold_check(x(1).with_scope(300), pow2(299)));
  CHECK_FALSE(threshold_check(x(1).with_scope(300), pow2(299) + 1));
}

TEST_CASE("count parsing and printing") {
  CHECK(to_string(parse_count("123456789012345678901234567890")) == "123456789012345678901234567890");
  CHECK_THROWS_AS(parse_count("-1"), RangeError);
  CHECK_THROWS_AS(parse_count(""), RangeError);
  CHECK_THROWS_AS(parse_count("12a"), RangeError);
}

TEST_CASE("property: brute force agrees with the evaluate-based oracle") {
  Rng rng(5);
  for (int i = 0; i < 400; ++i) {
    const Formula f = random_formula(rng, static_cast<std::uint32_t>(draw(rng, 10)), 6);
    REQUIRE(count_bruteforce(f) == oracle::count_models(f));
  }
}

TEST_CASE("property: fast counter equals brute force") {
  Rng rng(6);
  for (int i = 0; i < 2000; ++i) {
    const Formula f = random_formula(rng, static_cast<std::uint32_t>(draw(rng, 11)), 6);
    REQUIRE(count_fast(f) == count_bruteforce(f));
  }
}

TEST_CASE("property: scope scaling, negation complement, De Morgan") {
  Rng rng(8);
  for (int i = 0; i < 500; ++i) {
    const auto n = static_cast<std::uint32_t>(draw(rng, 7));
    const Formula f = random_formula(rng, n);
    const Formula g = random_formula(rng, n);
    const auto k = static_cast<std::uint32_t>(draw(rng, 4));
    CHECK(count_fast(f.with_scope(n + k)) == count_fast(f) * pow2(k));
    CHECK(count_fast(!f) == pow2(n) - count_fast(f));
    CHECK(count_fast(!(f && g)) == count_fast(!f || !g));
    CHECK(count_bruteforce(!(f && g)) == count_bruteforce(!f || !g));
  }
}

TEST_CASE("circuit store reuses residues") {
  CircuitStore store;
  const auto a = store.import((x(1) && x(2)).with_scope(2));
  const auto b = store.import((x(2) && x(1)).with_scope(2));
  CHECK(a == b);
  CHECK(store.restrict(a, 1, false) == CircuitStore::kFalse);
  CHECK(store.restrict(a, 1, true) == store.import(x(2)));
  CHECK(store.count_over(a, 5) == 8);
  CHECK_THROWS_AS(store.count_over(a, 1), ScopeError);
}
