#pragma once

#include "wrm/matrix.hpp"

namespace wrm {

// Parameter-level element of the group of pascal-like matrices: the pair
// (v, w), v != 0, naming the matrix with entries C(i,j) v^j w^{i-j}. The
// group law is dimension-independent, so elements are composed as pairs and
// realized as matrices only on demand.
class GroupElement {
 public:
  GroupElement(Rational v, Rational w);  // throws when v == 0

  const Rational& v() const { return v_; }
  const Rational& w() const { return w_; }

  friend bool operator==(const GroupElement&, const GroupElement&) = default;

 private:
  Rational v_, w_;
};

// The pair (1, 0); its matrix realization is the identity at every order.
GroupElement identity();

// Product law: (v, w) * (y, z) = (v*y, v*z + w), matching the matrix product
// of the corresponding pascal-like matrices at every order.
GroupElement compose(const GroupElement& g1, const GroupElement& g2);

// (v, w)^{-1} = (1/v, -w/v).
GroupElement inverse(const GroupElement& g);

// Realize the element as its n x n pascal-like matrix.
RatMatrix to_matrix(const GroupElement& g, Index n);

// Descriptor of to_matrix(g, n) * build_wrm(d): parameters become
// (x, v*y - w*x, v*z + w) and the first column is the binomial transform of
// alpha at (v, w); the first row is unchanged.
WrmDescriptor left_mul_descriptor(const GroupElement& g, const WrmDescriptor& d);

// Descriptor of build_wrm(d) * to_matrix(g, n)^t: parameters become
// (v*x + w, v*y - w*z, z) and the first row is the binomial transform of
// beta at (v, w); the first column is unchanged.
WrmDescriptor right_mul_descriptor(const GroupElement& g, const WrmDescriptor& d);

// Left action: multiplication by the inverse element, so that acting by a
// composite equals acting by the factors in order.
WrmDescriptor group_action_left(const GroupElement& g, const WrmDescriptor& d);

// Right action of the transposed group: plain right multiplication by g^t.
WrmDescriptor group_action_right(const GroupElement& g, const WrmDescriptor& d);

}  // namespace wrm
