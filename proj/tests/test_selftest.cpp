#include <doctest.h>

#include "dmaxsat/selftest.hpp"

using namespace dmaxsat;

TEST_CASE("small budget passes every suite") {
  SelftestOptions opts;
  opts.budget = 40;
  const SelftestReport r = run_selftest(opts);
  CHECK(r.suites.size() == 9);
  CHECK(r.passed());
  for (const auto& s : r.suites) {
    CHECK(s.cases > 0);
    CHECK(s.cases <= 40);
    CHECK(s.failures == 0);
    CHECK(s.counterexample.empty());
  }
  CHECK(r.text().find("selftest: PASS (9/9 suites)") != std::string::npos);
}

TEST_CASE("zero budget is vacuous") {
  SelftestOptions opts;
  opts.budget = 0;
  const SelftestReport r = run_selftest(opts);
  CHECK(r.passed());
  for (const auto& s : r.suites) CHECK(s.cases == 0);
}

TEST_CASE("same seed gives the same report") {
  SelftestOptions opts;
  opts.seed = 7;
  opts.budget = 25;
  CHECK(run_selftest(opts).text() == run_selftest(opts).text());
}

TEST_CASE("a corrupted packing is caught with a shrunk counterexample") {
  SelftestOptions opts;
  opts.budget = 100;
  opts.pack_pair_impl = corrupted_pack_pair;
  const SelftestReport r = run_selftest(opts);
  CHECK_FALSE(r.passed());
  const auto& pair = r.suites.front();
  CHECK(pair.name == "pair_law");
  CHECK(pair.failures > 0);
  CHECK_FALSE(pair.counterexample.empty());
  CHECK(r.text().find("selftest: FAIL") != std::string::npos);
}
