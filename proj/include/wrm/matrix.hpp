#pragma once

#include <utility>

#include "wrm/dense.hpp"
#include "wrm/rational.hpp"

namespace wrm {

// Weights of the defining recurrence
//   P(i,j) = x*P(i,j-1) + y*P(i-1,j-1) + z*P(i-1,j).
struct RecurrenceParams {
  Rational x, y, z;

  friend bool operator==(const RecurrenceParams&, const RecurrenceParams&) = default;
};

// First column alpha and first row beta, sharing the corner term
// alpha(0) = beta(0).
class BoundaryPair {
 public:
  BoundaryPair(RatVector alpha, RatVector beta) : alpha_(std::move(alpha)), beta_(std::move(beta)) {
    if (alpha_.size() != beta_.size())
      throw hypothesis_error("boundary sequences must have equal length");
    if (alpha_.size() < 1) throw hypothesis_error("boundary sequences must be non-empty");
    if (alpha_(0) != beta_(0))
      throw hypothesis_error("boundary sequences must share their first term");
  }

  const RatVector& alpha() const { return alpha_; }
  const RatVector& beta() const { return beta_; }
  const Rational& gamma() const { return alpha_(0); }
  Index size() const { return alpha_.size(); }

 private:
  RatVector alpha_, beta_;
};

// Symbolic name of an n x n weighted recurrence matrix: boundary sequences
// plus recurrence weights; n is the boundary length.
struct WrmDescriptor {
  RecurrenceParams params;
  BoundaryPair boundary;

  Index n() const { return boundary.size(); }
};

// Realize a descriptor: first column alpha, first row beta, interior filled
// by the recurrence.
RatMatrix build_wrm(const WrmDescriptor& d);

// Lower-triangular matrix with entries C(i,j) v^j w^{i-j} (diagonal v^i).
// Closed form of the weighted recurrence matrix with parameters [0, v, w]
// and boundaries (w^i), (1, 0, 0, ...).
RatMatrix pascal_like(const Rational& v, const Rational& w, Index n);

// Toeplitz matrix of a boundary pair: entry(i,j) = alpha(i-j) below the
// diagonal, beta(j-i) above. Parameters [0, 1, 0].
RatMatrix toeplitz(const BoundaryPair& pair);

// Weighted Toeplitz, parameters [0, x, 0]: diagonals scaled by powers of x,
// entry(i,j) = alpha(i-j) x^j for i >= j and beta(j-i) x^i for j >= i.
RatMatrix weighted_toeplitz(const BoundaryPair& pair, const Rational& x);

// Exact determinant. Rows are scaled by the lcm of their denominators to an
// integer matrix, reduced by fraction-free Bareiss elimination, and the
// integer determinant is divided back by the product of the row scales.
Rational det_bareiss(const RatMatrix& a);

}  // namespace wrm
