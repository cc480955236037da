#pragma once

#include <variant>
#include <vector>

#include "wrm/dense.hpp"
#include "wrm/rational.hpp"

namespace wrm {

// Boundary-sequence generators. A spec is symbolic; eval_sequence
// materializes a finite prefix.
struct GeometricSpec {
  Rational scale, ratio;  // scale * ratio^i, with 0^0 = 1
};
struct ArithmeticSpec {
  Rational start, step;  // start + i * step
};
struct ConstantSpec {
  Rational value;
};
struct ExplicitSpec {
  std::vector<Rational> values;  // non-empty
};
struct DeltaSpec {
  Index index;  // Kronecker delta: 1 at `index`, 0 elsewhere
};

using SequenceSpec =
    std::variant<GeometricSpec, ArithmeticSpec, ConstantSpec, ExplicitSpec, DeltaSpec>;

// Materialize the first n terms. Throws parse_error when an ExplicitSpec is
// shorter than n.
RatVector eval_sequence(const SequenceSpec& spec, Index n);

// eta_i = sum_{k<=i} C(i,k) p^k q^{i-k} s_k. Length-preserving; eta_0 = s_0.
RatVector binomial_transform(const RatVector& s, const Rational& p, const Rational& q);

// The unique x with binomial_transform(x, p, q) = s:
//   x_0 = s_0,  x_i = (s_i - sum_{k<i} C(i,k) p^k q^{i-k} x_k) / p^i.
// Requires p != 0.
RatVector inverse_binomial_transform(const RatVector& s, const Rational& p, const Rational& q);

// Left transform of a first-column sequence: inverse transform at (1, z).
RatVector tilde_alpha(const RatVector& alpha, const Rational& z);

// Right transform of a first-row sequence: inverse transform at (y+xz, x).
// Requires y + xz != 0.
RatVector tilde_beta(const RatVector& beta, const Rational& x, const Rational& y,
                     const Rational& z);

// Alternating-sum transform, s_i -> sum_k (-1)^{i+k} C(i,k) s_k; computed as
// the inverse transform at (1, 1).
RatVector hat_transform(const RatVector& s);

}  // namespace wrm
