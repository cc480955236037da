#include <doctest.h>

#include "test_support.hpp"
#include "wrm/verify.hpp"

using namespace wrm;

TEST_SUITE("verify") {
  TEST_CASE("det_cofactor on fixed matrices") {
    CHECK(verify::det_cofactor(mat({{1, 1, 1}, {1, 3, 5}, {1, 5, 13}})) == Rational(8));
    CHECK(verify::det_cofactor(RatMatrix::Identity(4, 4)) == Rational(1));
    CHECK(verify::det_cofactor(mat({{1, 1}, {1, 1}})) == Rational(0));
    CHECK(verify::det_cofactor(mat({{Rational(1, 2), Rational(1, 3)},
                                    {Rational(1, 4), Rational(1, 5)}})) == Rational(1, 60));
  }

  TEST_CASE("every registered check passes a sweep") {
    for (const auto& check : verify::all_checks()) {
      const verify::CheckResult result = verify::run_check(check, 12345, 25);
      INFO(check.name);
      for (const auto& failure : result.failures) {
        INFO("trial_seed=", failure.trial_seed, " ", failure.detail);
      }
      REQUIRE(result.passed());
    }
  }

  TEST_CASE("failures carry a reproducible trial seed") {
    int calls = 0;
    const verify::Check flaky{
        "test.flaky",
        [&calls](Rng& rng) -> std::optional<std::string> {
          ++calls;
          return rng.below(2) == 0 ? std::optional<std::string>("boom") : std::nullopt;
        },
        false};
    const verify::CheckResult result = verify::run_check(flaky, 7, 64);
    CHECK(calls == 64);
    REQUIRE_FALSE(result.passed());
    for (const auto& failure : result.failures) {
      const auto replay = verify::run_single_trial(flaky, failure.trial_seed);
      REQUIRE(replay.has_value());
      REQUIRE(*replay == "boom");
    }
  }

  TEST_CASE("deterministic checks run once") {
    const verify::Check* pascal = verify::find_check("rational.pascal_rule");
    REQUIRE(pascal != nullptr);
    CHECK(pascal->deterministic);
    const verify::CheckResult result = verify::run_check(*pascal, 1, 1000);
    CHECK(result.trials == 1);
    CHECK(result.passed());
  }

  TEST_CASE("registry names are unique and namespaced") {
    const auto& checks = verify::all_checks();
    CHECK(checks.size() >= 25);
    for (std::size_t i = 0; i < checks.size(); ++i) {
      CHECK(checks[i].name.find('.') != std::string::npos);
      for (std::size_t j = i + 1; j < checks.size(); ++j) REQUIRE(checks[i].name != checks[j].name);
    }
  }
}
