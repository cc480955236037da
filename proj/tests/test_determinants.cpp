#include <doctest.h>

#include "test_support.hpp"
#include "wrm/determinants.hpp"
#include "wrm/rng.hpp"
#include "wrm/verify.hpp"

using namespace wrm;

namespace {

WrmDescriptor desc(RecurrenceParams params, RatVector alpha, RatVector beta) {
  return WrmDescriptor{std::move(params), BoundaryPair(std::move(alpha), std::move(beta))};
}

WrmDescriptor geometric_desc(RecurrenceParams params, const Rational& c, const Rational& a,
                             const Rational& b, Index n) {
  return WrmDescriptor{params, BoundaryPair(eval_sequence(GeometricSpec{c, a}, n),
                                            eval_sequence(GeometricSpec{c, b}, n))};
}

}  // namespace

TEST_SUITE("determinants") {
  TEST_CASE("det_via_toeplitz frozen values") {
    CHECK(det_via_toeplitz(desc({1, 0, 1}, vec({1, 1, 1, 1, 1}), vec({1, 1, 1, 1, 1}))) ==
          Rational(1));
    CHECK(det_via_toeplitz(geometric_desc({1, 1, 1}, 1, 1, 1, 3)) == Rational(8));
    CHECK(det_via_toeplitz(desc({1, 1, 1}, vec({1, 1, 1, 1}), vec({1, 1, 1, 1}))) ==
          Rational(64));
    CHECK_THROWS_AS(det_via_toeplitz(desc({1, -1, 1}, vec({1, 1}), vec({1, 1}))),
                    hypothesis_error);
  }

  TEST_CASE("det_via_toeplitz equals Bareiss on random descriptors") {
    Rng rng(501);
    for (int t = 0; t < 40; ++t) {
      const Index n = static_cast<Index>(rng.int_in(1, 10));
      RecurrenceParams p = verify::random_params(rng);
      while ((p.y + p.x * p.z).is_zero()) p = verify::random_params(rng);
      const WrmDescriptor d{p, verify::random_boundary(rng, n)};
      REQUIRE(det_via_toeplitz(d) == det_bareiss(build_wrm(d)));
    }
  }

  TEST_CASE("det_matched_geometric") {
    const Rational a(2), b(3);
    const RecurrenceParams params{b, a * b, a};
    CHECK(det_matched_geometric(1, params, 3) == Rational(1728));
    CHECK(det_bareiss(build_wrm(geometric_desc(params, 1, a, b, 3))) == Rational(1728));
    CHECK(det_matched_geometric(1, {1, 0, 1}, 6) == Rational(1));
    CHECK(det_matched_geometric(1, {0, 1, 1}, 6) == Rational(1));
    CHECK(det_matched_geometric(Rational(1, 2), {1, 1, 1}, 3) == Rational(1, 8) * Rational(8));
  }

  TEST_CASE("is_middle_diagonal") {
    CHECK(is_middle_diagonal(desc({5, 1, 2}, vec({3, 6, 12}), vec({3, 15, 75}))));
    CHECK(is_middle_diagonal(desc({1, 0, 1}, vec({1, 1, 1}), vec({1, 1, 1}))));
    CHECK_FALSE(is_middle_diagonal(desc({1, 0, 1}, vec({1, 1, 1}), vec({1, 2, 4}))));
    CHECK_THROWS_AS(is_middle_diagonal(desc({1, -1, 1}, vec({1, 1}), vec({1, 1}))),
                    hypothesis_error);
  }

  TEST_CASE("det_unit_geometric") {
    CHECK(det_unit_geometric(2, 0, 1, 3) == Rational(18));
    CHECK(det_bareiss(mat({{1, 0, 0}, {2, 3, 3}, {4, 9, 15}})) == Rational(18));
    CHECK(det_unit_geometric(2, 3, 1, 3) == Rational(0));  // y + a + b - ab = 0
    CHECK(det_bareiss(build_wrm(geometric_desc({1, 1, 1}, 1, 2, 3, 3))) == Rational(0));
    // a = b = 1 collapses to (1+y)^C(n,2)
    for (Index n = 1; n <= 6; ++n) {
      const Rational y(5, 3);
      CHECK(det_unit_geometric(1, 1, y, n) ==
            pow(Rational(1) + y, static_cast<long>(n * (n - 1) / 2)));
    }
    CHECK_THROWS_AS(det_unit_geometric(2, 3, -1, 4), hypothesis_error);
  }

  TEST_CASE("det_unit_geometric equals Bareiss on random instances") {
    Rng rng(502);
    for (int t = 0; t < 40; ++t) {
      const Index n = static_cast<Index>(rng.int_in(1, 8));
      const Rational a = rng.rational(), b = rng.rational();
      Rational y = rng.rational();
      while (y == Rational(-1)) y = rng.rational();
      const WrmDescriptor d = geometric_desc({1, y, 1}, 1, a, b, n);
      REQUIRE(det_unit_geometric(a, b, y, n) == det_bareiss(build_wrm(d)));
    }
  }

  TEST_CASE("det_arithmetic_pm") {
    CHECK(det_arithmetic_pm(1, 2) == Rational(16));
    CHECK(det_arithmetic_pm(1, 1) == Rational(1));
    CHECK(det_arithmetic_pm(3, 2) == Rational(256));
    CHECK_THROWS_AS(det_arithmetic_pm(-1, 2), hypothesis_error);

    Rng rng(503);
    for (Index half_n = 1; half_n <= 4; ++half_n) {
      for (int t = 0; t < 8; ++t) {
        Rational y = rng.rational();
        while (y == Rational(-1)) y = rng.rational();
        const Index n = 2 * half_n;
        const WrmDescriptor d{{1, y, 1},
                              BoundaryPair(eval_sequence(ArithmeticSpec{0, 1}, n),
                                           eval_sequence(ArithmeticSpec{0, -1}, n))};
        REQUIRE(det_arithmetic_pm(y, half_n) == det_bareiss(build_wrm(d)));
      }
    }
  }

  TEST_CASE("det_pascal_like") {
    CHECK(det_pascal_like(2, 3) == Rational(8));
    CHECK(det_pascal_like(1, 7) == Rational(1));
    CHECK(det_pascal_like(3, 4) == Rational(729));
    CHECK(det_bareiss(pascal_like(2, 5, 3)) == Rational(8));
    CHECK(det_bareiss(pascal_like(3, Rational(-7, 2), 4)) == Rational(729));
    // independent of w
    Rng rng(504);
    for (int t = 0; t < 20; ++t) {
      const Index n = static_cast<Index>(rng.int_in(1, 8));
      const Rational v = rng.rational();
      REQUIRE(det_bareiss(pascal_like(v, rng.rational(), n)) == det_pascal_like(v, n));
    }
  }
}
