#include "wrm/determinants.hpp"

namespace wrm {

namespace {

long choose2(Index n) { return static_cast<long>(n) * (static_cast<long>(n) - 1) / 2; }

void require_regular_weight(const RecurrenceParams& p) {
  if ((p.y + p.x * p.z).is_zero())
    throw hypothesis_error("determinant reduction requires y + xz != 0");
}

}  // namespace

Rational det_via_toeplitz(const WrmDescriptor& d) {
  require_regular_weight(d.params);
  const auto& [x, y, z] = d.params;
  BoundaryPair tilde(tilde_alpha(d.boundary.alpha(), z),
                     tilde_beta(d.boundary.beta(), x, y, z));
  return pow(y + x * z, choose2(d.n())) * det_bareiss(toeplitz(tilde));
}

Rational det_matched_geometric(const Rational& c, const RecurrenceParams& params, Index n) {
  return pow(c, static_cast<long>(n)) * pow(params.y + params.x * params.z, choose2(n));
}

bool is_middle_diagonal(const WrmDescriptor& d) {
  require_regular_weight(d.params);
  const auto& [x, y, z] = d.params;
  const RatVector ta = tilde_alpha(d.boundary.alpha(), z);
  const RatVector tb = tilde_beta(d.boundary.beta(), x, y, z);
  for (Index i = 1; i < d.n(); ++i)
    if (!ta(i).is_zero() || !tb(i).is_zero()) return false;
  return true;
}

Rational det_unit_geometric(const Rational& a, const Rational& b, const Rational& y, Index n) {
  if (y == Rational(-1)) throw hypothesis_error("closed form requires y != -1");
  return pow(Rational(1) + y, choose2(n - 1)) *
         pow(y + a + b - a * b, static_cast<long>(n) - 1);
}

Rational det_arithmetic_pm(const Rational& y, Index half_n) {
  if (y == Rational(-1)) throw hypothesis_error("closed form requires y != -1");
  if (half_n < 1) throw hypothesis_error("order parameter must be >= 1");
  return pow(Rational(1) + y, 2 * static_cast<long>(half_n) * (static_cast<long>(half_n) - 1));
}

Rational det_pascal_like(const Rational& v, Index n) { return pow(v, choose2(n)); }

}  // namespace wrm
