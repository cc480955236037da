#include "wrm/sequence.hpp"

namespace wrm {

namespace {

void require_length(Index n) {
  if (n < 1) throw hypothesis_error("sequence length must be >= 1");
}

// powers[k] = base^k for k = 0..n-1, sharing the 0^0 = 1 convention.
std::vector<Rational> powers(const Rational& base, Index n) {
  std::vector<Rational> p(static_cast<std::size_t>(n));
  p[0] = Rational(1);
  for (Index k = 1; k < n; ++k) p[static_cast<std::size_t>(k)] = p[static_cast<std::size_t>(k - 1)] * base;
  return p;
}

}  // namespace

RatVector eval_sequence(const SequenceSpec& spec, Index n) {
  require_length(n);
  RatVector out(n);
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, GeometricSpec>) {
          Rational term = s.scale;  // scale * ratio^0, even for ratio = 0
          for (Index i = 0; i < n; ++i) {
            out(i) = term;
            term *= s.ratio;
          }
        } else if constexpr (std::is_same_v<T, ArithmeticSpec>) {
          Rational term = s.start;
          for (Index i = 0; i < n; ++i) {
            out(i) = term;
            term += s.step;
          }
        } else if constexpr (std::is_same_v<T, ConstantSpec>) {
          for (Index i = 0; i < n; ++i) out(i) = s.value;
        } else if constexpr (std::is_same_v<T, ExplicitSpec>) {
          if (s.values.empty()) throw parse_error("explicit sequence must be non-empty");
          if (static_cast<Index>(s.values.size()) < n)
            throw parse_error("explicit sequence shorter than requested length");
          for (Index i = 0; i < n; ++i) out(i) = s.values[static_cast<std::size_t>(i)];
        } else {
          static_assert(std::is_same_v<T, DeltaSpec>);
          if (s.index < 0) throw parse_error("delta index must be >= 0");
          for (Index i = 0; i < n; ++i) out(i) = Rational(i == s.index ? 1 : 0);
        }
      },
      spec);
  return out;
}

RatVector binomial_transform(const RatVector& s, const Rational& p, const Rational& q) {
  const Index n = s.size();
  require_length(n);
  const auto pk = powers(p, n);
  const auto qk = powers(q, n);
  RatVector out(n);
  for (Index i = 0; i < n; ++i) {
    Rational acc(0);
    for (Index k = 0; k <= i; ++k)
      acc += Rational(binomial(static_cast<unsigned long>(i), static_cast<unsigned long>(k))) *
             pk[static_cast<std::size_t>(k)] * qk[static_cast<std::size_t>(i - k)] * s(k);
    out(i) = acc;
  }
  return out;
}

RatVector inverse_binomial_transform(const RatVector& s, const Rational& p, const Rational& q) {
  if (p.is_zero()) throw hypothesis_error("inverse binomial transform requires p != 0");
  const Index n = s.size();
  require_length(n);
  const auto pk = powers(p, n);
  const auto qk = powers(q, n);
  RatVector out(n);
  out(0) = s(0);
  for (Index i = 1; i < n; ++i) {
    Rational acc = s(i);
    for (Index k = 0; k < i; ++k)
      acc -= Rational(binomial(static_cast<unsigned long>(i), static_cast<unsigned long>(k))) *
             pk[static_cast<std::size_t>(k)] * qk[static_cast<std::size_t>(i - k)] * out(k);
    out(i) = acc / pk[static_cast<std::size_t>(i)];
  }
  return out;
}

RatVector tilde_alpha(const RatVector& alpha, const Rational& z) {
  return inverse_binomial_transform(alpha, Rational(1), z);
}

RatVector tilde_beta(const RatVector& beta, const Rational& x, const Rational& y,
                     const Rational& z) {
  const Rational weight = y + x * z;
  if (weight.is_zero()) throw hypothesis_error("tilde_beta requires y + xz != 0");
  return inverse_binomial_transform(beta, weight, x);
}

RatVector hat_transform(const RatVector& s) {
  return inverse_binomial_transform(s, Rational(1), Rational(1));
}

}  // namespace wrm
