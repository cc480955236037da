#include "wrm/matrix.hpp"

#include <vector>

namespace wrm {

RatMatrix build_wrm(const WrmDescriptor& d) {
  const Index n = d.n();
  const auto& [x, y, z] = d.params;
  RatMatrix m(n, n);
  for (Index i = 0; i < n; ++i) m(i, 0) = d.boundary.alpha()(i);
  for (Index j = 1; j < n; ++j) m(0, j) = d.boundary.beta()(j);
  for (Index i = 1; i < n; ++i)
    for (Index j = 1; j < n; ++j)
      m(i, j) = x * m(i, j - 1) + y * m(i - 1, j - 1) + z * m(i - 1, j);
  return m;
}

RatMatrix pascal_like(const Rational& v, const Rational& w, Index n) {
  if (n < 1) throw hypothesis_error("matrix order must be >= 1");
  RatMatrix m = RatMatrix::Zero(n, n);
  std::vector<Rational> vk(static_cast<std::size_t>(n)), wk(static_cast<std::size_t>(n));
  vk[0] = wk[0] = Rational(1);  // 0^0 = 1
  for (Index k = 1; k < n; ++k) {
    vk[static_cast<std::size_t>(k)] = vk[static_cast<std::size_t>(k - 1)] * v;
    wk[static_cast<std::size_t>(k)] = wk[static_cast<std::size_t>(k - 1)] * w;
  }
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j <= i; ++j)
      m(i, j) = Rational(binomial(static_cast<unsigned long>(i), static_cast<unsigned long>(j))) *
                vk[static_cast<std::size_t>(j)] * wk[static_cast<std::size_t>(i - j)];
  return m;
}

RatMatrix toeplitz(const BoundaryPair& pair) {
  const Index n = pair.size();
  RatMatrix m(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      m(i, j) = i >= j ? pair.alpha()(i - j) : pair.beta()(j - i);
  return m;
}

RatMatrix weighted_toeplitz(const BoundaryPair& pair, const Rational& x) {
  const Index n = pair.size();
  RatMatrix m(n, n);
  std::vector<Rational> xk(static_cast<std::size_t>(n));
  xk[0] = Rational(1);
  for (Index k = 1; k < n; ++k) xk[static_cast<std::size_t>(k)] = xk[static_cast<std::size_t>(k - 1)] * x;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      m(i, j) = i >= j ? pair.alpha()(i - j) * xk[static_cast<std::size_t>(j)]
                       : pair.beta()(j - i) * xk[static_cast<std::size_t>(i)];
  return m;
}

Rational det_bareiss(const RatMatrix& a) {
  if (a.rows() != a.cols()) throw hypothesis_error("determinant of a non-square matrix");
  const Index n = a.rows();
  if (n == 0) return Rational(1);

  // Clear denominators row by row.
  std::vector<Integer> m(static_cast<std::size_t>(n * n));
  auto at = [&](Index i, Index j) -> Integer& { return m[static_cast<std::size_t>(i * n + j)]; };
  Integer scale_product(1);
  for (Index i = 0; i < n; ++i) {
    Integer row_lcm(1);
    for (Index j = 0; j < n; ++j) row_lcm = lcm(row_lcm, a(i, j).denominator());
    for (Index j = 0; j < n; ++j)
      at(i, j) = a(i, j).numerator() * (row_lcm / a(i, j).denominator());
    scale_product *= row_lcm;
  }

  // Fraction-free elimination: every division below is exact.
  int sign = 1;
  Integer prev(1);
  for (Index k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      Index pivot = k + 1;
      while (pivot < n && at(pivot, k) == 0) ++pivot;
      if (pivot == n) return Rational(0);
      for (Index j = 0; j < n; ++j) std::swap(at(k, j), at(pivot, j));
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j < n; ++j) {
        Integer t = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        at(i, j) = t;
      }
      at(i, k) = 0;
    }
    prev = at(k, k);
  }

  Integer det_int = at(n - 1, n - 1);
  if (sign < 0) det_int = -det_int;
  return Rational(det_int, scale_product);
}

}  // namespace wrm
