#include "wrm/rational.hpp"

#include <cctype>
#include <ostream>

namespace wrm {

namespace {

void require_nonzero_den(const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
}

}  // namespace

Rational::Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

Rational::Rational(const Integer& num, const Integer& den) {
  require_nonzero_den(den);
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::operator-() const {
  Rational r;
  r.q_ = -q_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  q_ += o.q_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  q_ -= o.q_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  q_ *= o.q_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("rational division by zero");
  q_ /= o.q_;
  return *this;
}

std::string Rational::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational Rational::parse(std::string_view text) {
  const auto fail = [&] {
    throw parse_error("invalid rational literal: '" + std::string(text) + "'");
  };

  // Grammar: -?digits(/digits)?  with a positive, nonzero denominator part.
  std::string_view rest = text;
  std::string num, den;
  if (!rest.empty() && rest.front() == '-') {
    num += '-';
    rest.remove_prefix(1);
  }
  auto take_digits = [&](std::string& out) {
    std::size_t i = 0;
    while (i < rest.size() && std::isdigit(static_cast<unsigned char>(rest[i]))) ++i;
    if (i == 0) fail();
    out.append(rest.substr(0, i));
    rest.remove_prefix(i);
  };
  take_digits(num);
  if (!rest.empty()) {
    if (rest.front() != '/') fail();
    rest.remove_prefix(1);
    take_digits(den);
    if (!rest.empty()) fail();
  }

  Integer n(num, 10);
  Integer d = den.empty() ? Integer(1) : Integer(den, 10);
  if (d == 0) fail();
  return Rational(n, d);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Integer binomial(unsigned long i, unsigned long k) {
  Integer result;
  mpz_bin_uiui(result.get_mpz_t(), i, k);
  return result;
}

Rational pow(const Rational& base, long exp) {
  if (exp == 0) return Rational(1);  // covers 0^0 = 1
  const bool invert = exp < 0;
  if (invert && base.is_zero()) throw std::domain_error("zero to a negative power");
  const unsigned long e = invert ? static_cast<unsigned long>(-(exp + 1)) + 1
                                 : static_cast<unsigned long>(exp);
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), e);
  return invert ? Rational(den, num) : Rational(num, den);
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace wrm
