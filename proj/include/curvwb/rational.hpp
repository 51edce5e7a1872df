#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>

namespace curvwb {

/// Raised for malformed or inconsistent user input (files, CLI arguments,
/// fixture parameters). The CLI maps it to exit code 2.
class input_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Exact rational scalar. Always stored reduced, denominator positive.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}
  Rational(long n) : v_(static_cast<signed long>(n)) {}
  Rational(long num, long den);

  /// Strict parse of "p", "-p" or "p/q" with q > 0. No whitespace, no '+'.
  static Rational parse(const std::string& text);

  /// Canonical form: "p" or "p/q" with gcd(p,q)=1, q>1 only when needed.
  std::string str() const;

  double to_double() const { return v_.get_d(); }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }
  long to_long() const;

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  /// *this -= a*b without an intermediate Rational.
  void subtract_product(const Rational& a, const Rational& b) { v_ -= a.v_ * b.v_; }
  /// *this += a*b.
  void add_product(const Rational& a, const Rational& b) { v_ += a.v_ * b.v_; }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { Rational r; r.v_ = -a.v_; return r; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

}  // namespace curvwb
