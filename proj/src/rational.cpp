#include "curvwb/rational.hpp"

#include <cctype>
#include <ostream>

namespace curvwb {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("rational division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::parse(const std::string& text) {
  // grammar: '-'? digits ('/' digits)?   with a positive denominator
  std::size_t pos = 0;
  const std::size_t n = text.size();
  if (pos < n && text[pos] == '-') ++pos;
  std::size_t num_start = pos;
  while (pos < n && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == num_start) throw input_error("malformed rational '" + text + "'");
  std::size_t den_start = std::string::npos;
  if (pos < n && text[pos] == '/') {
    den_start = ++pos;
    while (pos < n && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == den_start) throw input_error("malformed rational '" + text + "'");
  }
  if (pos != n) throw input_error("malformed rational '" + text + "'");

  Rational r;
  mpz_class num(text.substr(0, den_start == std::string::npos ? n : den_start - 1));
  mpz_class den(1);
  if (den_start != std::string::npos) {
    den = mpz_class(text.substr(den_start));
    if (den == 0) throw input_error("malformed rational '" + text + "': zero denominator");
  }
  r.v_ = mpq_class(num, den);
  r.v_.canonicalize();
  return r;
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

long Rational::to_long() const {
  if (!is_integer() || !v_.get_num().fits_slong_p())
    throw input_error("expected a (small) integer, got '" + str() + "'");
  return v_.get_num().get_si();
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

}  // namespace curvwb
