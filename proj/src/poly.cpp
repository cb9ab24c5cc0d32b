#include "barneskit/poly.hpp"

#include <stdexcept>

namespace barneskit {

Poly::Poly(const Rational& c) {
  if (!c.is_zero()) c_.push_back(c);
}

Poly Poly::monomial(int k, const Rational& c) {
  if (k < 0) throw std::invalid_argument("Poly::monomial: negative exponent");
  Poly p;
  if (c.is_zero()) return p;
  p.c_.assign(static_cast<std::size_t>(k) + 1, Rational());
  p.c_.back() = c;
  return p;
}

Poly Poly::from_coeffs(std::vector<Rational> c) {
  Poly p;
  p.c_ = std::move(c);
  p.trim();
  return p;
}

Rational Poly::coeff(int i) const {
  if (i < 0 || i > degree()) return Rational();
  return c_[static_cast<std::size_t>(i)];
}

Rational Poly::leading() const { return is_zero() ? Rational() : c_.back(); }

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::operator-() const {
  Poly r(*this);
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  Poly r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational());
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  r.trim();
  return r;
}

Poly operator*(const Rational& s, const Poly& p) {
  if (s.is_zero()) return Poly();
  Poly r(p);
  for (auto& c : r.c_) c *= s;
  return r;
}

Rational Poly::eval(const Rational& x) const {
  Rational acc;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

Poly Poly::compose_affine(const Rational& alpha, const Rational& beta) const {
  const Poly arg = Poly::from_coeffs({beta, alpha});
  Poly acc;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * arg + Poly(c_[i]);
  return acc;
}

Poly Poly::shift(const Rational& c) const { return compose_affine(Rational(1), c); }

Poly Poly::reflect() const {
  Poly r(*this);
  for (std::size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = -r.c_[i];
  return r;
}

std::string Poly::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) s += ", ";
    s += c_[i].str();
  }
  if (c_.empty()) s += "0";
  s += "]";
  return s;
}

std::pair<Poly, Poly> poly_divmod(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw std::domain_error("poly_divmod: division by zero polynomial");
  Poly rem = num;
  std::vector<Rational> q;
  const int dd = den.degree();
  if (rem.degree() >= dd) q.assign(static_cast<std::size_t>(rem.degree() - dd) + 1, Rational());
  const Rational lead_inv = den.leading().reciprocal();
  while (rem.degree() >= dd) {
    const int k = rem.degree() - dd;
    const Rational f = rem.leading() * lead_inv;
    q[static_cast<std::size_t>(k)] = f;
    rem -= Poly::monomial(k, f) * den;
  }
  return {Poly::from_coeffs(std::move(q)), rem};
}

Poly poly_interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  if (xs.size() != ys.size() || xs.empty())
    throw std::invalid_argument("poly_interpolate: bad node count");
  // Newton's divided differences.
  const std::size_t n = xs.size();
  std::vector<Rational> dd(ys);
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i)
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
  Poly p(dd[n - 1]);
  for (std::size_t i = n - 1; i-- > 0;) {
    // p <- p*(x - xs[i]) + dd[i]
    p = p * Poly::from_coeffs({-xs[i], Rational(1)}) + Poly(dd[i]);
  }
  return p;
}

}  // namespace barneskit
