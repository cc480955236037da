#include "wrm/verify.hpp"

#include <sstream>

#include "wrm/determinants.hpp"
#include "wrm/factorization.hpp"
#include "wrm/group.hpp"
#include "wrm/io.hpp"
#include "wrm/sequence.hpp"

namespace wrm::verify {

namespace {

using Maybe = std::optional<std::string>;

constexpr std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : text) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

Index rand_n(Rng& rng, Index lo, Index hi) {
  return static_cast<Index>(rng.int_in(lo, hi));
}

std::string describe(const WrmDescriptor& d) { return to_json(d).dump(); }

std::string describe(const GroupElement& g) {
  return "(" + g.v().str() + "," + g.w().str() + ")";
}

}  // namespace

Rational det_cofactor(const RatMatrix& a) {
  if (a.rows() != a.cols()) throw hypothesis_error("determinant of a non-square matrix");
  const Index n = a.rows();
  if (n == 0) return Rational(1);
  if (n == 1) return a(0, 0);
  Rational acc(0);
  int sign = 1;
  for (Index j = 0; j < n; ++j) {
    if (!a(0, j).is_zero()) {
      RatMatrix minor(n - 1, n - 1);
      for (Index i = 1; i < n; ++i) {
        Index col = 0;
        for (Index c = 0; c < n; ++c)
          if (c != j) minor(i - 1, col++) = a(i, c);
      }
      const Rational term = a(0, j) * det_cofactor(minor);
      acc += sign > 0 ? term : -term;
    }
    sign = -sign;
  }
  return acc;
}

RecurrenceParams random_params(Rng& rng) {
  return RecurrenceParams{rng.rational(), rng.rational(), rng.rational()};
}

BoundaryPair random_boundary(Rng& rng, Index n) {
  RatVector alpha(n), beta(n);
  for (Index i = 0; i < n; ++i) alpha(i) = rng.rational();
  beta(0) = alpha(0);
  for (Index i = 1; i < n; ++i) beta(i) = rng.rational();
  return BoundaryPair(std::move(alpha), std::move(beta));
}

SequenceSpec random_spec(Rng& rng, Index n, const Rational& start) {
  for (;;) {
    switch (rng.below(5)) {
      case 0:
        return GeometricSpec{start, rng.rational()};
      case 1:
        return ArithmeticSpec{start, rng.rational()};
      case 2:
        return ConstantSpec{start};
      case 3: {
        std::vector<Rational> values(static_cast<std::size_t>(n));
        values[0] = start;
        for (Index i = 1; i < n; ++i) values[static_cast<std::size_t>(i)] = rng.rational();
        return ExplicitSpec{std::move(values)};
      }
      default:
        if (start == Rational(1)) return DeltaSpec{0};
        if (start.is_zero()) return DeltaSpec{rand_n(rng, 1, n)};
        rng.count_rejection();  // delta cannot start with this term
    }
  }
}

namespace {

WrmDescriptor random_descriptor(Rng& rng, Index max_n, Index min_n = 1) {
  const Index n = rand_n(rng, min_n, max_n);
  return WrmDescriptor{random_params(rng), random_boundary(rng, n)};
}

WrmDescriptor random_spec_descriptor(Rng& rng, Index max_n) {
  const Index n = rand_n(rng, 1, max_n);
  const Rational start = rng.rational();
  const RatVector alpha = eval_sequence(random_spec(rng, n, start), n);
  const RatVector beta = eval_sequence(random_spec(rng, n, start), n);
  return WrmDescriptor{random_params(rng), BoundaryPair(alpha, beta)};
}

RecurrenceParams random_regular_params(Rng& rng) {
  for (;;) {
    RecurrenceParams p = random_params(rng);
    if (!(p.y + p.x * p.z).is_zero()) return p;
    rng.count_rejection();
  }
}

// Boundaries alpha_i = c z^i, beta_j = c x^j tied to the parameters.
WrmDescriptor matched_geometric_descriptor(Rng& rng, Index max_n, const Rational& c) {
  const Index n = rand_n(rng, 1, max_n);
  const RecurrenceParams p = random_regular_params(rng);
  return WrmDescriptor{p, BoundaryPair(eval_sequence(GeometricSpec{c, p.z}, n),
                                       eval_sequence(GeometricSpec{c, p.x}, n))};
}

GroupElement random_element(Rng& rng) {
  return GroupElement(rng.nonzero_rational(), rng.rational());
}

std::vector<Check> build_checks() {
  std::vector<Check> checks;
  auto add = [&](std::string name, TrialFn fn, bool deterministic = false) {
    checks.push_back(Check{std::move(name), std::move(fn), deterministic});
  };

  // ---- exact_core ----------------------------------------------------

  add("rational.field_axioms", [](Rng& rng) -> Maybe {
    const Rational a = rng.rational(30, 12), b = rng.rational(30, 12), c = rng.rational(30, 12);
    if ((a + b) + c != a + (b + c)) return "addition not associative";
    if ((a * b) * c != a * (b * c)) return "multiplication not associative";
    if (a + b != b + a || a * b != b * a) return "not commutative";
    if (a * (b + c) != a * b + a * c) return "not distributive";
    if (a + Rational(0) != a || a * Rational(1) != a) return "identity elements broken";
    if (!(a - a).is_zero()) return "additive inverse broken";
    if (!a.is_zero() && a * (Rational(1) / a) != Rational(1)) return "multiplicative inverse broken";
    return std::nullopt;
  });

  add("rational.canonical_form", [](Rng& rng) -> Maybe {
    const long num = rng.int_in(-40, 40);
    const long den = static_cast<long>(rng.int_in(1, 20));
    const long k = static_cast<long>(rng.int_in(1, 9));
    const Rational direct(num, den);
    const Rational scaled(num * k, den * k);
    if (direct != scaled) return "scaling numerator and denominator changed the value";
    if (direct.denominator() <= 0) return "denominator not positive";
    if (gcd(abs(direct.numerator()), direct.denominator()) != 1) return "not reduced";
    if (Rational::parse(direct.str()) != direct) return "text round-trip broke canonical form";
    return std::nullopt;
  });

  add(
      "rational.pascal_rule",
      [](Rng&) -> Maybe {
        for (unsigned long i = 1; i <= 64; ++i)
          for (unsigned long k = 1; k <= i; ++k)
            if (binomial(i, k) != binomial(i - 1, k - 1) + binomial(i - 1, k))
              return "Pascal rule failed at (" + std::to_string(i) + "," + std::to_string(k) + ")";
        if (binomial(3, 5) != 0) return "C(3,5) should be 0";
        return std::nullopt;
      },
      /*deterministic=*/true);

  // ---- sequences ------------------------------------------------------

  add("sequences.round_trip", [](Rng& rng) -> Maybe {
    const Index n = rand_n(rng, 1, 16);
    RatVector s(n);
    for (Index i = 0; i < n; ++i) s(i) = rng.rational();
    const Rational p = rng.nonzero_rational(), q = rng.rational();
    if (!vec_eq(binomial_transform(inverse_binomial_transform(s, p, q), p, q), s))
      return "transform(inverse(s)) != s";
    if (!vec_eq(inverse_binomial_transform(binomial_transform(s, p, q), p, q), s))
      return "inverse(transform(s)) != s";
    return std::nullopt;
  });

  add("sequences.tilde_wrappers", [](Rng& rng) -> Maybe {
    const Index n = rand_n(rng, 1, 16);
    RatVector s(n);
    for (Index i = 0; i < n; ++i) s(i) = rng.rational();
    const RecurrenceParams p = random_regular_params(rng);
    if (!vec_eq(tilde_alpha(s, p.z), inverse_binomial_transform(s, Rational(1), p.z)))
      return "tilde_alpha is not the inverse transform at (1, z)";
    if (!vec_eq(tilde_beta(s, p.x, p.y, p.z),
                inverse_binomial_transform(s, p.y + p.x * p.z, p.x)))
      return "tilde_beta is not the inverse transform at (y+xz, x)";
    return std::nullopt;
  });

  add("sequences.hat_alternating_sum", [](Rng& rng) -> Maybe {
    const Index n = rand_n(rng, 1, 16);
    RatVector s(n);
    for (Index i = 0; i < n; ++i) s(i) = rng.rational();
    const RatVector hat = hat_transform(s);
    for (Index i = 0; i < n; ++i) {
      Rational acc(0);
      for (Index k = 0; k <= i; ++k) {
        const Rational term =
            Rational(binomial(static_cast<unsigned long>(i), static_cast<unsigned long>(k))) * s(k);
        acc += ((i + k) % 2 == 0) ? term : -term;
      }
      if (hat(i) != acc) return "hat transform differs from the alternating sum at " + std::to_string(i);
    }
    return std::nullopt;
  });

  add("sequences.geometric_collapse", [](Rng& rng) -> Maybe {
    const Index n = rand_n(rng, 1, 16);
    const Rational c = rng.rational(), q = rng.rational();
    const Rational p = rng.nonzero_rational();
    const RatVector got =
        inverse_binomial_transform(eval_sequence(GeometricSpec{c, q}, n), p, q);
    if (got(0) != c) return "first term changed";
    for (Index i = 1; i < n; ++i)
      if (!got(i).is_zero()) return "geometric prefix did not collapse to (c, 0, ...)";
    return std::nullopt;
  });

  // ---- wrm -------------------------------------------------------------

  add("wrm.recurrence_invariant", [](Rng& rng) -> Maybe {
    const WrmDescriptor d = random_descriptor(rng, 12);
    const RatMatrix m = build_wrm(d);
    const auto& [x, y, z] = d.params;
    for (Index i = 1; i < d.n(); ++i)
      for (Index j = 1; j < d.n(); ++j)
        if (m(i, j) != x * m(i, j - 1) + y * m(i - 1, j - 1) + z * m(i - 1, j))
          return "recurrence violated at (" + std::to_string(i) + "," + std::to_string(j) +
                 ") for " + describe(d);
    return std::nullopt;
  });

  add("wrm.pascal_closed_form", [](Rng& rng) -> Maybe {
    const Index n = rand_n(rng, 1, 12);
    const Rational v = rng.rational(), w = rng.rational();
    const WrmDescriptor d{RecurrenceParams{Rational(0), v, w},
                          BoundaryPair(eval_sequence(GeometricSpec{Rational(1), w}, n),
                                       eval_sequence(DeltaSpec{0}, n))};
    if (!mat_eq(pascal_like(v, w, n), build_wrm(d)))
      return "closed form != recurrence fill for v=" + v.str() + " w=" + w.str();
    return std::nullopt;
  });

  add("wrm.toeplitz_equivalence", [](Rng& rng) -> Maybe {
    const Index n = rand_n(rng, 1, 12);
    const BoundaryPair pair = random_boundary(rng, n);
    const Rational x = rng.rational();
    if (!mat_eq(toeplitz(pair),
                build_wrm(WrmDescriptor{RecurrenceParams{Rational(0), Rational(1), Rational(0)}, pair})))
      return "toeplitz != build_wrm at (0,1,0)";
    if (!mat_eq(weighted_toeplitz(pair, x),
                build_wrm(WrmDescriptor{RecurrenceParams{Rational(0), x, Rational(0)}, pair})))
      return "weighted toeplitz != build_wrm at (0,x,0), x=" + x.str();
    return std::nullopt;
  });

  add("wrm.symmetry", [](Rng& rng) -> Maybe {
    const Index n = rand_n(rng, 1, 12);
    RatVector alpha(n);
    for (Index i = 0; i < n; ++i) alpha(i) = rng.rational();
    const Rational x = rng.rational(), y = rng.rational();
    const RatMatrix m = build_wrm(WrmDescriptor{RecurrenceParams{x, y, x}, BoundaryPair(alpha, alpha)});
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < i; ++j)
        if (m(i, j) != m(j, i)) return "alpha = beta with x = z did not give a symmetric matrix";
    return std::nullopt;
  });

  add("wrm.transpose_product", [](Rng& rng) -> Maybe {
    const Index n = rand_n(rng, 1, 8);
    const RatMatrix a = build_wrm(WrmDescriptor{random_params(rng), random_boundary(rng, n)});
    const RatMatrix b = build_wrm(WrmDescriptor{random_params(rng), random_boundary(rng, n)});
    if (!mat_eq(mat_transpose(mat_mul(a, b)), mat_mul(mat_transpose(b), mat_transpose(a))))
      return "(AB)^t != B^t A^t";
    return std::nullopt;
  });

  add("wrm.bareiss_vs_cofactor", [](Rng& rng) -> Maybe {
    const Index n = rand_n(rng, 1, 6);
    RatMatrix m(n, n);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) m(i, j) = rng.rational();
    // singular matrices must exercise the zero-pivot path now and then
    if (n >= 2 && rng.below(4) == 0) m.row(n - 1) = m.row(0);
    if (det_bareiss(m) != det_cofactor(m)) return "Bareiss disagrees with cofactor expansion";
    return std::nullopt;
  });

  add("wrm.pascal_like_det", [](Rng& rng) -> Maybe {
    const Index n = rand_n(rng, 1, 8);
    const Rational v = rng.rational(), w1 = rng.rational(), w2 = rng.rational();
    const Rational expected = det_pascal_like(v, n);
    if (det_bareiss(pascal_like(v, w1, n)) != expected)
      return "det pascal_like != v^C(n,2)";
    if (det_bareiss(pascal_like(v, w2, n)) != expected)
      return "det pascal_like depends on w";
    return std::nullopt;
  });

  // ---- group -----------------------------------------------------------

  add("group.homomorphism", [](Rng& rng) -> Maybe {
    const Index n = rand_n(rng, 1, 10);
    const GroupElement g1 = random_element(rng), g2 = random_element(rng);
    if (!mat_eq(to_matrix(compose(g1, g2), n), mat_mul(to_matrix(g1, n), to_matrix(g2, n))))
      return "to_matrix(compose) != product for " + describe(g1) + " " + describe(g2);
    return std::nullopt;
  });

  add("group.axioms", [](Rng& rng) -> Maybe {
    const GroupElement g1 = random_element(rng), g2 = random_element(rng), g3 = random_element(rng);
    if (!(compose(g1, identity()) == g1) || !(compose(identity(), g1) == g1))
      return "identity law failed";
    if (!(compose(g1, inverse(g1)) == identity()) || !(compose(inverse(g1), g1) == identity()))
      return "inverse law failed for " + describe(g1);
    if (!(compose(compose(g1, g2), g3) == compose(g1, compose(g2, g3))))
      return "compose not associative";
    if (!(inverse(inverse(g1)) == g1)) return "double inverse not the identity map";
    return std::nullopt;
  });

  add("group.transpose_closure", [](Rng& rng) -> Maybe {
    const Index n = rand_n(rng, 1, 8);
    const GroupElement g1 = random_element(rng), g2 = random_element(rng);
    const RatMatrix lhs = mat_mul(mat_transpose(to_matrix(g1, n)), mat_transpose(to_matrix(g2, n)));
    if (!mat_eq(lhs, mat_transpose(to_matrix(compose(g2, g1), n))))
      return "transposes do not close under the reversed product";
    return std::nullopt;
  });

  add("group.left_product_descriptor", [](Rng& rng) -> Maybe {
    const WrmDescriptor d = random_descriptor(rng, 10);
    const GroupElement g = random_element(rng);
    if (!mat_eq(build_wrm(left_mul_descriptor(g, d)), mat_mul(to_matrix(g, d.n()), build_wrm(d))))
      return "left product descriptor mismatch for g=" + describe(g) + " d=" + describe(d);
    return std::nullopt;
  });

  add("group.right_product_descriptor", [](Rng& rng) -> Maybe {
    const WrmDescriptor d = random_descriptor(rng, 10);
    const GroupElement g = random_element(rng);
    if (!mat_eq(build_wrm(right_mul_descriptor(g, d)),
                mat_mul(build_wrm(d), mat_transpose(to_matrix(g, d.n())))))
      return "right product descriptor mismatch for g=" + describe(g) + " d=" + describe(d);
    return std::nullopt;
  });

  add("group.left_action_laws", [](Rng& rng) -> Maybe {
    const WrmDescriptor d = random_descriptor(rng, 10);
    const GroupElement g1 = random_element(rng), g2 = random_element(rng);
    const WrmDescriptor fixed = group_action_left(identity(), d);
    if (!(fixed.params == d.params) || !vec_eq(fixed.boundary.alpha(), d.boundary.alpha()) ||
        !vec_eq(fixed.boundary.beta(), d.boundary.beta()))
      return "identity does not act trivially on the left";
    const WrmDescriptor joint = group_action_left(compose(g1, g2), d);
    const WrmDescriptor staged = group_action_left(g2, group_action_left(g1, d));
    if (!(joint.params == staged.params) || !vec_eq(joint.boundary.alpha(), staged.boundary.alpha()) ||
        !vec_eq(joint.boundary.beta(), staged.boundary.beta()))
      return "left action is not compatible with composition";
    return std::nullopt;
  });

  add("group.right_action_laws", [](Rng& rng) -> Maybe {
    const WrmDescriptor d = random_descriptor(rng, 10);
    const GroupElement g1 = random_element(rng), g2 = random_element(rng);
    const WrmDescriptor fixed = group_action_right(identity(), d);
    if (!(fixed.params == d.params) || !vec_eq(fixed.boundary.alpha(), d.boundary.alpha()) ||
        !vec_eq(fixed.boundary.beta(), d.boundary.beta()))
      return "identity does not act trivially on the right";
    // acting by g1^t then g2^t multiplies by (g2 g1)^t
    const WrmDescriptor joint = group_action_right(compose(g2, g1), d);
    const WrmDescriptor staged = group_action_right(g2, group_action_right(g1, d));
    if (!(joint.params == staged.params) || !vec_eq(joint.boundary.alpha(), staged.boundary.alpha()) ||
        !vec_eq(joint.boundary.beta(), staged.boundary.beta()))
      return "right action is not compatible with composition";
    return std::nullopt;
  });

  // ---- factorization ----------------------------------------------------

  add("factorization.unifying", [](Rng& rng) -> Maybe {
    const WrmDescriptor d = random_spec_descriptor(rng, 12);
    const Rational r = rng.nonzero_rational(), v = rng.nonzero_rational();
    const Rational s = rng.rational(), w = rng.rational();
    const Factorization f = unifying_factorization(d, r, s, v, w);
    if (!verify_factorization(f))
      return "L*M*R != P for " + describe(d) + " rsvw=(" + r.str() + "," + s.str() + "," +
             v.str() + "," + w.str() + ")";
    if (!is_lower_triangular(f.left) || !is_lower_triangular(mat_transpose(f.right)))
      return "factor triangularity violated";
    return std::nullopt;
  });

  add("factorization.toeplitz", [](Rng& rng) -> Maybe {
    const Index n = rand_n(rng, 1, 12);
    const Rational start = rng.rational();
    const WrmDescriptor d{random_regular_params(rng),
                          BoundaryPair(eval_sequence(random_spec(rng, n, start), n),
                                       eval_sequence(random_spec(rng, n, start), n))};
    const Factorization f = toeplitz_factorization(d);
    if (!verify_factorization(f)) return "toeplitz factorization does not verify for " + describe(d);
    if (!is_toeplitz(f.middle)) return "middle factor is not Toeplitz for " + describe(d);
    const RecurrenceParams plain{Rational(0), Rational(1), Rational(0)};
    if (!(f.middle_descriptor.params == plain)) return "middle parameters are not (0,1,0)";
    return std::nullopt;
  });

  add("factorization.special_cases", [](Rng& rng) -> Maybe {
    // tan = unifying at (z, z, x, x)
    for (;;) {
      WrmDescriptor d = random_descriptor(rng, 10);
      if (d.params.x.is_zero() || d.params.z.is_zero()) {
        rng.count_rejection();
        continue;
      }
      const Factorization t = tan_factorization(d);
      const Factorization u =
          unifying_factorization(d, d.params.z, d.params.z, d.params.x, d.params.x);
      if (!mat_eq(t.left, u.left) || !mat_eq(t.middle, u.middle) || !mat_eq(t.right, u.right))
        return "tan factorization differs from its unifying specialization";
      if (!verify_factorization(t)) return "tan factorization does not verify";
      break;
    }
    // mp = unifying at (1, 1, 1, 1) on parameters (1, 0, 1)
    const Index n = rand_n(rng, 1, 10);
    const WrmDescriptor d{RecurrenceParams{Rational(1), Rational(0), Rational(1)},
                          random_boundary(rng, n)};
    const Factorization m = mp_factorization(d);
    const Factorization u = unifying_factorization(d, Rational(1), Rational(1), Rational(1), Rational(1));
    if (!mat_eq(m.left, u.left) || !mat_eq(m.middle, u.middle) || !mat_eq(m.right, u.right))
      return "mp factorization differs from its unifying specialization";
    if (!verify_factorization(m)) return "mp factorization does not verify";
    return std::nullopt;
  });

  add("factorization.sequence_consistency", [](Rng& rng) -> Maybe {
    const Index n = rand_n(rng, 1, 12);
    const WrmDescriptor d{random_regular_params(rng), random_boundary(rng, n)};
    const auto& [x, y, z] = d.params;
    const Factorization f = toeplitz_factorization(d);
    if (!vec_eq(f.middle_descriptor.boundary.alpha(), tilde_alpha(d.boundary.alpha(), z)))
      return "middle first column is not tilde_alpha";
    if (!vec_eq(f.middle_descriptor.boundary.beta(), tilde_beta(d.boundary.beta(), x, y, z)))
      return "middle first row is not tilde_beta";
    const WrmDescriptor dm{RecurrenceParams{Rational(1), Rational(0), Rational(1)},
                           random_boundary(rng, n)};
    const Factorization m = mp_factorization(dm);
    if (!vec_eq(m.middle_descriptor.boundary.alpha(), hat_transform(dm.boundary.alpha())) ||
        !vec_eq(m.middle_descriptor.boundary.beta(), hat_transform(dm.boundary.beta())))
      return "mp middle boundaries are not the hat transforms";
    return std::nullopt;
  });

  add("factorization.det_multiplicative", [](Rng& rng) -> Maybe {
    const WrmDescriptor d = random_descriptor(rng, 8);
    const Rational r = rng.nonzero_rational(), v = rng.nonzero_rational();
    const Factorization f = unifying_factorization(d, r, rng.rational(), v, rng.rational());
    const Rational lhs = det_bareiss(f.left) * det_bareiss(f.middle) * det_bareiss(f.right);
    if (lhs != det_bareiss(build_wrm(d))) return "det(L) det(M) det(R) != det(P)";
    return std::nullopt;
  });

  // ---- determinants ------------------------------------------------------

  add("determinants.toeplitz_reduction", [](Rng& rng) -> Maybe {
    const Index n = rand_n(rng, 1, 10);
    const WrmDescriptor d{random_regular_params(rng), random_boundary(rng, n)};
    if (det_via_toeplitz(d) != det_bareiss(build_wrm(d)))
      return "Toeplitz reduction disagrees with Bareiss for " + describe(d);
    return std::nullopt;
  });

  add("determinants.middle_diagonal_iff", [](Rng& rng) -> Maybe {
    const Rational c = rng.rational();
    const WrmDescriptor matched = matched_geometric_descriptor(rng, 10, c);
    if (!is_middle_diagonal(matched))
      return "matched geometric boundaries not reported diagonal: " + describe(matched);
    if (matched.n() >= 2) {
      RatVector alpha = matched.boundary.alpha();
      const Index k = rand_n(rng, 1, matched.n() - 1);
      alpha(k) += Rational(1);
      const WrmDescriptor perturbed{matched.params,
                                    BoundaryPair(std::move(alpha), matched.boundary.beta())};
      if (is_middle_diagonal(perturbed))
        return "perturbed boundary still reported diagonal: " + describe(perturbed);
    }
    return std::nullopt;
  });

  add("determinants.matched_geometric", [](Rng& rng) -> Maybe {
    const Rational c = rng.rational();
    const WrmDescriptor d = matched_geometric_descriptor(rng, 10, c);
    if (det_matched_geometric(c, d.params, d.n()) != det_bareiss(build_wrm(d)))
      return "c^n (y+xz)^C(n,2) disagrees with Bareiss for " + describe(d);
    return std::nullopt;
  });

  add("determinants.unit_geometric", [](Rng& rng) -> Maybe {
    const Index n = rand_n(rng, 1, 8);
    const Rational a = rng.rational(), b = rng.rational();
    Rational y = rng.rational();
    while (y == Rational(-1)) {
      rng.count_rejection();
      y = rng.rational();
    }
    const WrmDescriptor d{RecurrenceParams{Rational(1), y, Rational(1)},
                          BoundaryPair(eval_sequence(GeometricSpec{Rational(1), a}, n),
                                       eval_sequence(GeometricSpec{Rational(1), b}, n))};
    if (det_unit_geometric(a, b, y, n) != det_bareiss(build_wrm(d)))
      return "(1+y)^C(n-1,2) (y+a+b-ab)^(n-1) disagrees with Bareiss for a=" + a.str() +
             " b=" + b.str() + " y=" + y.str() + " n=" + std::to_string(n);
    return std::nullopt;
  });

  add("determinants.arithmetic_pm", [](Rng& rng) -> Maybe {
    const Index half_n = rand_n(rng, 1, 4);
    Rational y = rng.rational();
    while (y == Rational(-1)) {
      rng.count_rejection();
      y = rng.rational();
    }
    const Index n = 2 * half_n;
    const WrmDescriptor d{RecurrenceParams{Rational(1), y, Rational(1)},
                          BoundaryPair(eval_sequence(ArithmeticSpec{Rational(0), Rational(1)}, n),
                                       eval_sequence(ArithmeticSpec{Rational(0), Rational(-1)}, n))};
    if (det_arithmetic_pm(y, half_n) != det_bareiss(build_wrm(d)))
      return "(1+y)^(2n(n-1)) disagrees with Bareiss for y=" + y.str() +
             " half_n=" + std::to_string(half_n);
    return std::nullopt;
  });

  return checks;
}

}  // namespace

const std::vector<Check>& all_checks() {
  static const std::vector<Check> checks = build_checks();
  return checks;
}

const Check* find_check(std::string_view name) {
  for (const auto& c : all_checks())
    if (c.name == name) return &c;
  return nullptr;
}

CheckResult run_check(const Check& check, std::uint64_t master_seed, int trials) {
  CheckResult result;
  result.name = check.name;
  result.trials = check.deterministic ? 1 : trials;
  const std::uint64_t stream = master_seed ^ fnv1a(check.name);
  for (int t = 0; t < result.trials; ++t) {
    const std::uint64_t trial_seed = mix_seed(stream, static_cast<std::uint64_t>(t));
    Rng rng(trial_seed);
    if (auto detail = check.trial(rng); detail.has_value()) {
      if (result.failures.size() < 5)
        result.failures.push_back(TrialFailure{trial_seed, *detail});
    }
    result.rejections += rng.rejections();
  }
  return result;
}

std::optional<std::string> run_single_trial(const Check& check, std::uint64_t trial_seed) {
  Rng rng(trial_seed);
  return check.trial(rng);
}

}  // namespace wrm::verify
