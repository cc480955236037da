#pragma once

#include <Eigen/Core>

#include "wrm/errors.hpp"
#include "wrm/rational.hpp"

// Eigen scalar traits for wrm::Rational. Exact arithmetic: epsilon and
// dummy_precision are hard zeros, so no Eigen facility may introduce slack.
namespace Eigen {

template <>
struct NumTraits<wrm::Rational> : GenericNumTraits<wrm::Rational> {
  using Real = wrm::Rational;
  using NonInteger = wrm::Rational;
  using Literal = wrm::Rational;
  using Nested = wrm::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = HugeCost,
    AddCost = HugeCost,
    MulCost = HugeCost,
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace wrm {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RatMatrix = DenseMatrix<Rational>;
using RatVector = DenseVector<Rational>;

using Index = Eigen::Index;

// Exact product with an explicit shape check (Eigen only asserts in debug).
inline RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows()) throw hypothesis_error("matrix product dimension mismatch");
  return a * b;
}

inline RatMatrix mat_transpose(const RatMatrix& a) { return a.transpose(); }

// Exact structural equality; shape mismatch is simply "not equal".
inline bool mat_eq(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

inline bool vec_eq(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) return false;
  for (Index i = 0; i < a.size(); ++i)
    if (a(i) != b(i)) return false;
  return true;
}

inline bool is_lower_triangular(const RatMatrix& a) {
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = i + 1; j < a.cols(); ++j)
      if (!a(i, j).is_zero()) return false;
  return true;
}

inline bool is_diagonal(const RatMatrix& a) {
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (i != j && !a(i, j).is_zero()) return false;
  return true;
}

// Constant along every diagonal.
inline bool is_toeplitz(const RatMatrix& a) {
  for (Index i = 1; i < a.rows(); ++i)
    for (Index j = 1; j < a.cols(); ++j)
      if (a(i, j) != a(i - 1, j - 1)) return false;
  return true;
}

}  // namespace wrm
