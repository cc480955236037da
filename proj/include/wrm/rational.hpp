#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "wrm/errors.hpp"

namespace wrm {

using Integer = mpz_class;

// Exact rational scalar, always in canonical form: denominator > 0 and
// gcd(|num|, den) = 1. Equality is structural equality of canonical forms.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(int n) : q_(n) {}                     // NOLINT(google-explicit-constructor)
  Rational(long n) : q_(n) {}                    // NOLINT(google-explicit-constructor)
  Rational(const Integer& n) : q_(n) {}          // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  Rational(const Integer& num, const Integer& den);

  Integer numerator() const { return q_.get_num(); }
  Integer denominator() const { return q_.get_den(); }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_one() const { return q_ == 1; }
  bool is_integer() const { return q_.get_den() == 1; }

  Rational operator-() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);  // throws on division by zero

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

  // Canonical text form: "p" for integers, "p/q" otherwise, '-' in front.
  std::string str() const;

  // Strict parser for the same grammar. Throws parse_error on anything else.
  static Rational parse(std::string_view text);

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class q_;
};

// C(i, k), exactly; zero when k > i.
Integer binomial(unsigned long i, unsigned long k);

// base^exp with the convention 0^0 = 1. Negative exponents invert;
// 0 to a negative power throws.
Rational pow(const Rational& base, long exp);

Rational abs(const Rational& r);

}  // namespace wrm
