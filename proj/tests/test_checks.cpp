#include "subchain/checks.hpp"

#include <doctest.h>

using namespace subchain;

TEST_CASE("quick validation suite passes on the healthy build") {
  CheckOptions opts;
  opts.quick = true;
  const auto results = run_validation(opts);
  REQUIRE(results.size() >= 6);
  for (const auto& r : results) {
    INFO(r.name, ": measured ", r.measured, " tolerance ", r.tolerance);
    CHECK(r.pass);
  }
  CHECK(all_pass(results));
}

TEST_CASE("an injected kernel sign error is caught by the energy balance") {
  CheckOptions opts;
  opts.quick = true;
  opts.mutate_kernel_sign = true;
  const auto results = run_validation(opts);
  bool energy_failed = false;
  for (const auto& r : results) {
    if (r.name == "energy_balance") {
      energy_failed = !r.pass;
    } else {
      CHECK(r.pass);  // the mutation must not leak into other checks
    }
  }
  CHECK(energy_failed);
  CHECK_FALSE(all_pass(results));
}
