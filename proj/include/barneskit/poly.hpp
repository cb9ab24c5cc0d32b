#pragma once

#include "barneskit/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace barneskit {

// Dense univariate polynomial over Rational. coeffs()[i] multiplies x^i;
// trailing zeros are trimmed, the zero polynomial stores nothing (degree -1).
class Poly {
 public:
  Poly() = default;
  Poly(const Rational& c);
  static Poly monomial(int k, const Rational& c = Rational(1));
  static Poly from_coeffs(std::vector<Rational> c);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rational coeff(int i) const;
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational leading() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& s, const Poly& p);
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  Rational eval(const Rational& x) const;
  // p(x + c)
  Poly shift(const Rational& c) const;
  // p(alpha*x + beta)
  Poly compose_affine(const Rational& alpha, const Rational& beta) const;
  // p(-x)
  Poly reflect() const;

  // Coefficient list "[c0, c1, ...]".
  std::string str() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

// num = q*den + r with deg r < deg den; den must be nonzero.
std::pair<Poly, Poly> poly_divmod(const Poly& num, const Poly& den);

// Interpolating polynomial through (xs[i], ys[i]); the xs must be distinct.
Poly poly_interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

}  // namespace barneskit
