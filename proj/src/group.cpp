#include "wrm/group.hpp"

#include "wrm/sequence.hpp"

namespace wrm {

GroupElement::GroupElement(Rational v, Rational w) : v_(std::move(v)), w_(std::move(w)) {
  if (v_.is_zero()) throw hypothesis_error("group element requires v != 0");
}

GroupElement identity() { return GroupElement(Rational(1), Rational(0)); }

GroupElement compose(const GroupElement& g1, const GroupElement& g2) {
  return GroupElement(g1.v() * g2.v(), g1.v() * g2.w() + g1.w());
}

GroupElement inverse(const GroupElement& g) {
  const Rational vi = Rational(1) / g.v();
  return GroupElement(vi, -g.w() * vi);
}

RatMatrix to_matrix(const GroupElement& g, Index n) { return pascal_like(g.v(), g.w(), n); }

WrmDescriptor left_mul_descriptor(const GroupElement& g, const WrmDescriptor& d) {
  const auto& [x, y, z] = d.params;
  RecurrenceParams params{x, g.v() * y - g.w() * x, g.v() * z + g.w()};
  RatVector eta = binomial_transform(d.boundary.alpha(), g.v(), g.w());
  return WrmDescriptor{params, BoundaryPair(std::move(eta), d.boundary.beta())};
}

WrmDescriptor right_mul_descriptor(const GroupElement& g, const WrmDescriptor& d) {
  const auto& [x, y, z] = d.params;
  RecurrenceParams params{g.v() * x + g.w(), g.v() * y - g.w() * z, z};
  RatVector eta = binomial_transform(d.boundary.beta(), g.v(), g.w());
  return WrmDescriptor{params, BoundaryPair(d.boundary.alpha(), std::move(eta))};
}

WrmDescriptor group_action_left(const GroupElement& g, const WrmDescriptor& d) {
  return left_mul_descriptor(inverse(g), d);
}

WrmDescriptor group_action_right(const GroupElement& g, const WrmDescriptor& d) {
  return right_mul_descriptor(g, d);
}

}  // namespace wrm
