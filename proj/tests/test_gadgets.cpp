#include <doctest.h>

#include "dmaxsat/gadgets.hpp"
#include "dmaxsat/generate.hpp"
#include "oracle.hpp"

using namespace dmaxsat;

namespace {
Formula x(std::uint32_t i) { return Formula::var(i); }
}  // namespace

TEST_CASE("pack_pair examples") {
  const Formula a = pack_pair(x(1).with_scope(1), (x(1) || x(2)).with_scope(2));
  CHECK(a.scope() == 4);
  CHECK(oracle::count_models(a) == 7);

  CHECK(oracle::count_models(pack_pair(Formula::constant(false, 2), Formula::constant(false, 2))) == 0);

  const Formula tt = pack_pair(Formula::constant(true, 2), Formula::constant(true, 2));
  CHECK(tt.scope() == 5);
  CHECK(oracle::count_models(tt) == 20);
}

TEST_CASE("pack_pair size is exact") {
  const Formula f = (x(1) || !x(2)).with_scope(2);
  const Formula g = (x(1) && x(3)).with_scope(3);
  CHECK(size(pack_pair(f, g)) == size(f) + size(g) + 2 * 3 + 4);
}

TEST_CASE("pack_many examples") {
  const PackedFormula p = pack_many({(x(1) && x(2)).with_scope(2), (x(1) || x(2)).with_scope(2)});
  CHECK(p.formula.scope() == 6);
  CHECK(p.total_scope() == 6);
  CHECK(oracle::count_models(p.formula) == 25);

  const Formula f = (x(1) || x(3)).with_scope(3);
  const PackedFormula single = pack_many({f});
  CHECK(single.formula.scope() == 4);
  CHECK(oracle::count_models(single.formula) == oracle::count_models(f));

  const auto t = Formula::constant(true, 1);
  const PackedFormula three = pack_many({t, t, t});
  CHECK(three.formula.scope() == 6);
  CHECK(oracle::count_models(three.formula) == 42);
}

TEST_CASE("pack_many rejects bad operand lists") {
  CHECK_THROWS_AS(pack_many({}), ArityError);
  CHECK_THROWS_AS(pack_many({x(1).with_scope(1), x(1).with_scope(2)}), ArityError);
}

TEST_CASE("unpack_digits") {
  CHECK(unpack_digits(25, 2, 2) == std::vector<Count>{1, 3});
  CHECK(unpack_digits(0, 3, 4) == std::vector<Count>{0, 0, 0, 0});
  CHECK(unpack_digits(42, 1, 3) == std::vector<Count>{2, 2, 2});
  CHECK_THROWS_AS(unpack_digits(64, 1, 3), RangeError);
}

TEST_CASE("less_than_const examples") {
  CHECK(oracle::count_models(less_than_const(3, 5)) == 5);
  CHECK(oracle::count_models(less_than_const(3, 0)) == 0);
  CHECK(oracle::count_models(less_than_const(3, 8)) == 8);
  CHECK(less_than_const(3, 8) == Formula::constant(true, 3));
  CHECK_THROWS_AS(less_than_const(3, 9), RangeError);
}

TEST_CASE("less_than_const models are exactly the values below c") {
  for (std::uint32_t n = 0; n <= 6; ++n) {
    for (std::uint64_t c = 0; c <= (1ULL << n); ++c) {
      const Formula m = less_than_const(n, c);
      CHECK(m.scope() == n);
      CHECK(size(m) == (c == (1ULL << n) ? 0 : 2 * n));
      for (std::uint64_t v = 0; v < (1ULL << n); ++v) {
        REQUIRE(evaluate(m, Assignment::from_bits(v, n)) == (v < c));
      }
    }
  }
}

TEST_CASE("k_value") {
  CHECK(k_value(2, 1, 3) == 9);
  CHECK(k_value(2, 1, 2) == 8);
  CHECK(k_value(2, 1, 4) == 8);
  CHECK(k_value(7, 13, 0) == 0);
  CHECK(k_value(6, 7, 39) == 1521);
  CHECK_THROWS_AS(k_value(2, 3, 1), RangeError);
  CHECK_THROWS_AS(k_value(2, 1, 5), RangeError);
  CHECK_THROWS_AS(k_value(0, 0, 0), RangeError);
}

TEST_CASE("psi_gadget examples") {
  const Formula p = psi_gadget((x(1) || x(2)).with_scope(2), 1);
  CHECK(p.scope() == 5);
  CHECK(oracle::count_models(p) == 9);
  CHECK(oracle::count_models(psi_gadget(Formula::constant(false, 2), 2)) == 0);
  CHECK(oracle::count_models(psi_gadget(Formula::constant(true, 1), 0)) == 0);
  CHECK_THROWS_AS(psi_gadget(x(1).with_scope(2), 3), RangeError);
  CHECK_THROWS_AS(psi_gadget(Formula::constant(true, 0), 0), RangeError);
}

TEST_CASE("property: psi count law and exact size") {
  Rng rng(21);
  for (int i = 0; i < 150; ++i) {
    const auto n = static_cast<std::uint32_t>(draw(rng, 4)) + 1;
    const Formula f = random_formula(rng, n);
    const auto delta = draw(rng, (1ULL << (n - 1)) + 1);
    const Formula p = psi_gadget(f, delta);
    CHECK(oracle::count_models(p) == k_value(n, delta, oracle::count_models(f)));
    const std::size_t m = 2 * delta == (1ULL << n) ? 0 : 2 * n;
    CHECK(size(p) == 2 * size(f) + m + 6);
    CHECK(size(p) <= 2 * size(f) + 3 * n + 6);
  }
}

TEST_CASE("property: pair law") {
  Rng rng(22);
  for (int i = 0; i < 200; ++i) {
    const auto m = static_cast<std::uint32_t>(draw(rng, 6));
    const auto n = static_cast<std::uint32_t>(draw(rng, 6));
    const Formula f = random_formula(rng, m);
    const Formula g = random_formula(rng, n);
    CHECK(oracle::count_models(pack_pair(f, g)) ==
          oracle::count_models(f) + (oracle::count_models(g) << m));
  }
}
