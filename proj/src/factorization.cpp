#include "wrm/factorization.hpp"

#include "wrm/sequence.hpp"

namespace wrm {

Factorization unifying_factorization(const WrmDescriptor& d, const Rational& r,
                                     const Rational& s, const Rational& v, const Rational& w) {
  if (r.is_zero() || v.is_zero())
    throw hypothesis_error("unifying factorization requires rv != 0");

  const Index n = d.n();
  const auto& [x, y, z] = d.params;
  RecurrenceParams middle_params{(x - w) / v, (y + x * s + z * w - s * w) / (r * v),
                                 (z - s) / r};
  RatVector rho = inverse_binomial_transform(d.boundary.alpha(), r, s);
  RatVector sigma = inverse_binomial_transform(d.boundary.beta(), v, w);
  WrmDescriptor middle{middle_params, BoundaryPair(std::move(rho), std::move(sigma))};

  return Factorization{pascal_like(r, s, n), build_wrm(middle),
                       pascal_like(v, w, n).transpose(), d, middle};
}

Factorization toeplitz_factorization(const WrmDescriptor& d) {
  const auto& [x, y, z] = d.params;
  const Rational weight = y + x * z;
  if (weight.is_zero())
    throw hypothesis_error("toeplitz factorization requires y + xz != 0");
  return unifying_factorization(d, Rational(1), z, weight, x);
}

Factorization tan_factorization(const WrmDescriptor& d) {
  const auto& [x, y, z] = d.params;
  if (x.is_zero() || z.is_zero()) throw hypothesis_error("tan factorization requires xz != 0");
  return unifying_factorization(d, z, z, x, x);
}

Factorization mp_factorization(const WrmDescriptor& d) {
  const RecurrenceParams expected{Rational(1), Rational(0), Rational(1)};
  if (!(d.params == expected))
    throw hypothesis_error("mp factorization requires parameters (1, 0, 1)");
  return unifying_factorization(d, Rational(1), Rational(1), Rational(1), Rational(1));
}

bool verify_factorization(const Factorization& f) {
  return mat_eq(mat_mul(mat_mul(f.left, f.middle), f.right), build_wrm(f.claimed));
}

}  // namespace wrm
