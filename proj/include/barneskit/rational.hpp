#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>
#include <utility>

namespace barneskit {

// Arbitrary-precision rational, always kept canonical:
// gcd(|num|, den) = 1, den >= 1, zero stored as 0/1.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}
  Rational(long n) : v_(static_cast<signed long>(n)) {}
  Rational(unsigned n) : v_(static_cast<unsigned long>(n)) {}
  Rational(unsigned long n) : v_(n) {}
  Rational(long n, long d);
  explicit Rational(const mpz_class& n) : v_(n) {}
  Rational(const mpz_class& n, const mpz_class& d);

  // Parses "p" or "p/q", base 10.
  static Rational from_string(std::string_view s);
  // Exact conversion; every finite double is dyadic.
  static Rational from_double(double x);

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const;
  Rational& operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
  }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  Rational reciprocal() const;
  Rational pow(long e) const;
  Rational abs() const;
  mpz_class floor() const;
  // x - floor(x), in [0, 1).
  Rational frac() const;
  double to_double() const { return v_.get_d(); }
  // Requires is_integer() and a value that fits in long.
  long to_long() const;
  std::string str() const { return v_.get_str(); }

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

}  // namespace barneskit
