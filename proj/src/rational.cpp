#include "barneskit/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace barneskit {

Rational::Rational(long n, long d) : Rational(mpz_class(n), mpz_class(d)) {}

Rational::Rational(const mpz_class& n, const mpz_class& d) {
  if (sgn(d) == 0) throw std::domain_error("Rational: zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rational Rational::from_string(std::string_view s) {
  auto fail = [&] {
    throw std::invalid_argument("Rational: cannot parse \"" + std::string(s) + "\"");
  };
  if (s.empty()) fail();
  const std::size_t slash = s.find('/');
  auto check_int = [&](std::string_view part) {
    if (part.empty()) fail();
    std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (i == part.size()) fail();
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') fail();
  };
  if (slash == std::string_view::npos) {
    check_int(s);
    return Rational(mpz_class(std::string(s)));
  }
  const std::string_view p = s.substr(0, slash);
  const std::string_view q = s.substr(slash + 1);
  check_int(p);
  check_int(q);
  if (!q.empty() && (q[0] == '-' || q[0] == '+'))
    fail();  // sign belongs on the numerator
  return Rational(mpz_class(std::string(p)), mpz_class(std::string(q)));
}

Rational Rational::from_double(double x) {
  if (!std::isfinite(x)) throw std::domain_error("Rational: non-finite double");
  mpq_class q;
  mpq_set_d(q.get_mpq_t(), x);
  return Rational(std::move(q));
}

Rational Rational::operator-() const {
  Rational r(*this);
  mpq_neg(r.v_.get_mpq_t(), v_.get_mpq_t());
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw std::domain_error("Rational: reciprocal of zero");
  Rational r(*this);
  mpq_inv(r.v_.get_mpq_t(), v_.get_mpq_t());
  return r;
}

Rational Rational::pow(long e) const {
  if (e < 0) return reciprocal().pow(-e);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), num().get_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), den().get_mpz_t(), static_cast<unsigned long>(e));
  // num/den coprime implies their powers are as well.
  Rational r;
  r.v_ = mpq_class(n, d);
  return r;
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

mpz_class Rational::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
  return q;
}

Rational Rational::frac() const { return *this - Rational(floor()); }

long Rational::to_long() const {
  if (!is_integer()) throw std::domain_error("Rational: not an integer: " + str());
  if (!num().fits_slong_p()) throw std::domain_error("Rational: integer too large for long");
  return num().get_si();
}

}  // namespace barneskit
