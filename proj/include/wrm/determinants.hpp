#pragma once

#include <string>

#include "wrm/matrix.hpp"
#include "wrm/sequence.hpp"

namespace wrm {

// Cross-check record: a closed-form determinant next to the Bareiss value.
// A disagreement would indicate a bug, never a fallback.
struct DetReport {
  Index n = 0;
  Rational closed_form;
  Rational bareiss;
  bool agrees = false;
  std::string formula;
};

// det build_wrm(d) computed through the Toeplitz factorization:
// (y+xz)^C(n,2) times the determinant of the middle Toeplitz factor.
// Requires y + xz != 0.
Rational det_via_toeplitz(const WrmDescriptor& d);

// Closed form c^n (y+xz)^C(n,2), valid when alpha_i = c z^i and
// beta_j = c x^j (see is_middle_diagonal).
Rational det_matched_geometric(const Rational& c, const RecurrenceParams& params, Index n);

// True iff the middle Toeplitz factor of the decomposition is diagonal,
// equivalently iff alpha_i = c z^i and beta_j = c x^j for a common c.
// Decided on the transformed sequences, so explicit boundaries are handled
// uniformly. Requires y + xz != 0.
bool is_middle_diagonal(const WrmDescriptor& d);

// Closed form (1+y)^C(n-1,2) (y+a+b-ab)^(n-1) for boundaries a^i, b^i and
// parameters (1, y, 1). Requires y != -1.
Rational det_unit_geometric(const Rational& a, const Rational& b, const Rational& y, Index n);

// Closed form (1+y)^(2n(n-1)) for boundaries alpha_i = i, beta_i = -i,
// parameters (1, y, 1), at even order 2*half_n. Requires y != -1.
Rational det_arithmetic_pm(const Rational& y, Index half_n);

// det pascal_like(v, w, n) = v^C(n,2), independent of w.
Rational det_pascal_like(const Rational& v, Index n);

}  // namespace wrm
