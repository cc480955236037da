#include <doctest.h>

#include "test_support.hpp"
#include "wrm/factorization.hpp"
#include "wrm/rng.hpp"
#include "wrm/sequence.hpp"
#include "wrm/verify.hpp"

using namespace wrm;

namespace {

WrmDescriptor desc(RecurrenceParams params, RatVector alpha, RatVector beta) {
  return WrmDescriptor{std::move(params), BoundaryPair(std::move(alpha), std::move(beta))};
}

WrmDescriptor geometric_desc(RecurrenceParams params, const Rational& a, const Rational& b,
                             Index n) {
  return WrmDescriptor{params, BoundaryPair(eval_sequence(GeometricSpec{1, a}, n),
                                            eval_sequence(GeometricSpec{1, b}, n))};
}

}  // namespace

TEST_SUITE("factorization") {
  TEST_CASE("unifying factorization with unit group elements") {
    // parameters (1, y, 1), r = s = v = w = 1: middle weights (0, y+1, 0)
    // and middle boundaries are the alternating-sum transforms
    const Rational y(3);
    const WrmDescriptor d = desc({1, y, 1}, vec({2, 5, 7}), vec({2, -1, 4}));
    const Factorization f = unifying_factorization(d, 1, 1, 1, 1);
    CHECK((f.middle_descriptor.params == RecurrenceParams{0, y + 1, 0}));
    CHECK(vec_eq(f.middle_descriptor.boundary.alpha(), hat_transform(d.boundary.alpha())));
    CHECK(vec_eq(f.middle_descriptor.boundary.beta(), hat_transform(d.boundary.beta())));
    CHECK(verify_factorization(f));
  }

  TEST_CASE("unifying factorization on the all-ones Pascal matrix") {
    const WrmDescriptor d = desc({1, 0, 1}, vec({1, 1, 1}), vec({1, 1, 1}));
    const Factorization f = unifying_factorization(d, 1, 1, 1, 1);
    CHECK(mat_eq(f.left, mat({{1, 0, 0}, {1, 1, 0}, {1, 2, 1}})));
    CHECK(mat_eq(f.middle, RatMatrix::Identity(3, 3)));
    CHECK(mat_eq(f.right, mat_transpose(f.left)));
    CHECK(verify_factorization(f));
  }

  TEST_CASE("unifying factorization rejects rv = 0") {
    const WrmDescriptor d = desc({1, 0, 1}, vec({1, 1}), vec({1, 1}));
    CHECK_THROWS_AS(unifying_factorization(d, 0, 1, 1, 1), hypothesis_error);
    CHECK_THROWS_AS(unifying_factorization(d, 1, 1, 0, 1), hypothesis_error);
  }

  TEST_CASE("toeplitz factorization: geometric boundaries flatten the middle") {
    // boundaries a^i and b^i with weights (b, ab, a): middle is the identity
    const Rational a(2), b(3);
    const WrmDescriptor d = geometric_desc({b, a * b, a}, a, b, 3);
    const Factorization f = toeplitz_factorization(d);
    CHECK(mat_eq(f.middle, RatMatrix::Identity(3, 3)));
    CHECK(mat_eq(f.left, pascal_like(1, a, 3)));
    CHECK(mat_eq(f.right, mat_transpose(pascal_like(Rational(2) * a * b, b, 3))));
    CHECK(verify_factorization(f));
  }

  TEST_CASE("toeplitz factorization: all-ones middle") {
    // boundaries (a+1)^i with weights (a, 1-a^2, a): middle is the unit matrix
    const Rational a(2);
    const WrmDescriptor d = geometric_desc({a, Rational(1) - a * a, a}, a + 1, a + 1, 3);
    const Factorization f = toeplitz_factorization(d);
    CHECK(mat_eq(f.middle, RatMatrix::Ones(3, 3)));
    CHECK(mat_eq(f.left, pascal_like(1, a, 3)));
    CHECK(mat_eq(f.right, mat_transpose(pascal_like(1, a, 3))));
    CHECK(verify_factorization(f));
  }

  TEST_CASE("toeplitz factorization of the Pascal matrix") {
    const WrmDescriptor d = desc({1, 0, 1}, vec({1, 1, 1, 1}), vec({1, 1, 1, 1}));
    const Factorization f = toeplitz_factorization(d);
    CHECK(mat_eq(f.middle, RatMatrix::Identity(4, 4)));
    CHECK(mat_eq(f.left, pascal_like(1, 1, 4)));
    CHECK(mat_eq(f.right, mat_transpose(pascal_like(1, 1, 4))));
    CHECK(verify_factorization(f));
  }

  TEST_CASE("toeplitz factorization rejects y + xz = 0") {
    const WrmDescriptor d = desc({1, -1, 1}, vec({1, 1}), vec({1, 1}));
    CHECK_THROWS_AS(toeplitz_factorization(d), hypothesis_error);
  }

  TEST_CASE("mp factorization") {
    const WrmDescriptor ones = desc({1, 0, 1}, vec({1, 1, 1}), vec({1, 1, 1}));
    CHECK(mat_eq(mp_factorization(ones).middle, RatMatrix::Identity(3, 3)));

    const WrmDescriptor mixed = desc({1, 0, 1}, vec({1, 2, 4}), vec({1, 1, 1}));
    CHECK(mat_eq(mp_factorization(mixed).middle,
                 toeplitz(BoundaryPair(vec({1, 1, 1}), vec({1, 0, 0})))));

    const WrmDescriptor delta = desc({1, 0, 1}, vec({1, 0, 0}), vec({1, 0, 0}));
    CHECK(mat_eq(mp_factorization(delta).middle,
                 toeplitz(BoundaryPair(vec({1, -1, 1}), vec({1, -1, 1})))));
    CHECK(verify_factorization(mp_factorization(delta)));

    const WrmDescriptor wrong = desc({1, 1, 1}, vec({1, 1}), vec({1, 1}));
    CHECK_THROWS_AS(mp_factorization(wrong), hypothesis_error);
  }

  TEST_CASE("tan factorization") {
    const WrmDescriptor pascal = desc({1, 0, 1}, vec({1, 1, 1}), vec({1, 1, 1}));
    CHECK((tan_factorization(pascal).middle_descriptor.params == RecurrenceParams{0, 1, 0}));

    Rng rng(401);
    RatVector alpha(4), beta(4);
    for (Index i = 0; i < 4; ++i) alpha(i) = rng.rational();
    beta(0) = alpha(0);
    for (Index i = 1; i < 4; ++i) beta(i) = rng.rational();
    const WrmDescriptor d = desc({2, 6, 1}, alpha, beta);
    const Factorization f = tan_factorization(d);
    CHECK((f.middle_descriptor.params == RecurrenceParams{0, 4, 0}));  // 1 + 6/(2*1)
    CHECK(verify_factorization(f));

    const WrmDescriptor ones = desc({1, 1, 1}, vec({1, 1, 1}), vec({1, 1, 1}));
    const Factorization g = tan_factorization(ones);
    CHECK((g.middle_descriptor.params == RecurrenceParams{0, 2, 0}));
    CHECK(vec_eq(g.middle_descriptor.boundary.alpha(), vec({1, 0, 0})));
    CHECK(vec_eq(g.middle_descriptor.boundary.beta(), vec({1, 0, 0})));
    CHECK(verify_factorization(g));

    CHECK_THROWS_AS(tan_factorization(desc({0, 1, 1}, vec({1, 1}), vec({1, 1}))),
                    hypothesis_error);
  }

  TEST_CASE("verify_factorization detects a perturbed factor") {
    const Rational a(2), b(3);
    Factorization f = toeplitz_factorization(geometric_desc({b, a * b, a}, a, b, 3));
    CHECK(verify_factorization(f));
    f.middle(1, 1) += Rational(1);
    CHECK_FALSE(verify_factorization(f));
  }

  TEST_CASE("random unifying factorizations verify exactly") {
    Rng rng(402);
    for (int t = 0; t < 40; ++t) {
      const Index n = static_cast<Index>(rng.int_in(1, 12));
      const WrmDescriptor d{verify::random_params(rng), verify::random_boundary(rng, n)};
      const Factorization f = unifying_factorization(d, rng.nonzero_rational(), rng.rational(),
                                                     rng.nonzero_rational(), rng.rational());
      REQUIRE(verify_factorization(f));
      REQUIRE(det_bareiss(f.left) * det_bareiss(f.middle) * det_bareiss(f.right) ==
              det_bareiss(build_wrm(d)));
    }
  }
}
