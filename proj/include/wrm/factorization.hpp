#pragma once

#include "wrm/group.hpp"
#include "wrm/matrix.hpp"

namespace wrm {

// Triple L * M * R claimed to equal build_wrm(claimed). L is lower
// triangular, R is the transpose of a pascal-like matrix (upper triangular),
// and M is carried both as a matrix and as the descriptor that names it, so
// determinant code can reuse the middle parameters without re-deriving them.
struct Factorization {
  RatMatrix left, middle, right;
  WrmDescriptor claimed;
  WrmDescriptor middle_descriptor;
};

// General three-factor decomposition: for any r, s, v, w with rv != 0,
//
//   build_wrm(d) = pascal_like(r, s) * M * pascal_like(v, w)^t,
//
// where M is the weighted recurrence matrix with parameters
// ((x-w)/v, (y+xs+zw-sw)/(rv), (z-s)/r), first column the inverse binomial
// transform of alpha at (r, s) and first row the inverse transform of beta
// at (v, w).
Factorization unifying_factorization(const WrmDescriptor& d, const Rational& r,
                                     const Rational& s, const Rational& v, const Rational& w);

// Specialization (r, s, v, w) = (1, z, y+xz, x), valid when y + xz != 0: the
// middle factor collapses to the plain Toeplitz matrix of the tilde
// transforms of alpha and beta.
Factorization toeplitz_factorization(const WrmDescriptor& d);

// Specialization (r, s, v, w) = (z, z, x, x), valid when xz != 0: the middle
// factor is a weighted Toeplitz matrix with weight 1 + y/(xz).
Factorization tan_factorization(const WrmDescriptor& d);

// Specialization r = s = v = w = 1 for parameters (1, 0, 1): the middle
// factor is the Toeplitz matrix of the alternating-sum (hat) transforms.
Factorization mp_factorization(const WrmDescriptor& d);

// Exact check that left * middle * right reproduces build_wrm(claimed).
bool verify_factorization(const Factorization& f);

}  // namespace wrm
