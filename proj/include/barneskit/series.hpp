#pragma once

#include "barneskit/poly.hpp"
#include "barneskit/rational.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace barneskit {

template <class R>
struct RingTraits;

template <>
struct RingTraits<Rational> {
  static Rational zero() { return Rational(); }
  static Rational one() { return Rational(1); }
  static Rational invert(const Rational& x) {
    if (x.is_zero())
      throw std::domain_error(
          "series: constant term is zero; factor out powers of z first");
    return x.reciprocal();
  }
};

template <>
struct RingTraits<Poly> {
  static Poly zero() { return Poly(); }
  static Poly one() { return Poly(Rational(1)); }
  static Poly invert(const Poly& p) {
    if (p.degree() != 0)
      throw std::domain_error(
          "series: constant term is not a unit in the coefficient ring");
    return Poly(p.coeff(0).reciprocal());
  }
};

// Power series in z truncated at z^N: coefficients of z^0..z^N are kept,
// and every binary operation truncates to the smaller operand order.
template <class R>
class Series {
 public:
  explicit Series(int order) {
    if (order < 0) throw std::invalid_argument("Series: negative order");
    c_.assign(static_cast<std::size_t>(order) + 1, RingTraits<R>::zero());
  }
  static Series one(int order) {
    Series s(order);
    s.c_[0] = RingTraits<R>::one();
    return s;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const R& at(int i) const { return c_.at(static_cast<std::size_t>(i)); }
  void set(int i, R v) { c_.at(static_cast<std::size_t>(i)) = std::move(v); }

  friend Series operator+(const Series& a, const Series& b) {
    const int n = std::min(a.order(), b.order());
    Series r(n);
    for (int i = 0; i <= n; ++i) r.c_[i] = a.c_[i] + b.c_[i];
    return r;
  }
  friend Series operator-(const Series& a, const Series& b) {
    const int n = std::min(a.order(), b.order());
    Series r(n);
    for (int i = 0; i <= n; ++i) r.c_[i] = a.c_[i] - b.c_[i];
    return r;
  }
  friend Series operator*(const Series& a, const Series& b) {
    const int n = std::min(a.order(), b.order());
    Series r(n);
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= i; ++j) r.c_[i] += a.c_[j] * b.c_[i - j];
    return r;
  }

  // t with (*this) * t = 1 + O(z^{N+1}); requires a unit constant term.
  Series invert() const {
    const R inv0 = RingTraits<R>::invert(c_[0]);
    Series t(order());
    t.c_[0] = inv0;
    for (int k = 1; k <= order(); ++k) {
      R acc = RingTraits<R>::zero();
      for (int j = 1; j <= k; ++j) acc += c_[j] * t.c_[k - j];
      t.c_[k] = -(inv0 * acc);
    }
    return t;
  }

  Series pow(unsigned e) const {
    Series result = one(order());
    Series base = *this;
    while (e > 0) {
      if (e & 1U) result = result * base;
      e >>= 1U;
      if (e > 0) base = base * base;
    }
    return result;
  }

  Series truncated(int new_order) const {
    Series r(std::min(new_order, order()));
    for (int i = 0; i <= r.order(); ++i) r.c_[i] = c_[i];
    return r;
  }

 private:
  std::vector<R> c_;
};

using QSeries = Series<Rational>;
using PSeries = Series<Poly>;

inline PSeries lift(const QSeries& s) {
  PSeries r(s.order());
  for (int i = 0; i <= s.order(); ++i) r.set(i, Poly(s.at(i)));
  return r;
}

}  // namespace barneskit
