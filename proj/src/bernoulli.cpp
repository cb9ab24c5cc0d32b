#include "barneskit/bernoulli.hpp"

#include "barneskit/comb.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace barneskit {

QSeries bernoulli_core_series(int order) {
  // (e^z - 1)/z = sum_j z^j/(j+1)!, then invert.
  QSeries e(order);
  for (int j = 0; j <= order; ++j)
    e.set(j, Rational(mpz_class(1), factorial(static_cast<unsigned long>(j) + 1)));
  return e.invert();
}

PSeries exp_x_series(int order) {
  PSeries s(order);
  for (int j = 0; j <= order; ++j)
    s.set(j, Rational(mpz_class(1), factorial(static_cast<unsigned long>(j))) *
                 Poly::monomial(j));
  return s;
}

namespace {

std::mutex table_mu;
std::vector<Rational>& bern_table() {
  static std::vector<Rational> t;
  return t;
}

}  // namespace

Rational bernoulli_number(unsigned k) {
  std::lock_guard<std::mutex> g(table_mu);
  auto& t = bern_table();
  if (k < t.size()) return t[k];
  const QSeries core = bernoulli_core_series(static_cast<int>(k));
  t.resize(k + 1);
  for (unsigned j = 0; j <= k; ++j) t[j] = core.at(static_cast<int>(j)) * Rational(factorial(j));
  return t[k];
}

Poly bernoulli_poly(unsigned k) {
  std::vector<Rational> c(k + 1);
  for (unsigned j = 0; j <= k; ++j)
    c[k - j] = binomial(static_cast<long>(k), static_cast<long>(j)) * bernoulli_number(j);
  return Poly::from_coeffs(std::move(c));
}

Rational bernoulli_order(unsigned k, unsigned n) {
  if (n < 1) throw std::invalid_argument("bernoulli_order: order must be >= 1");
  const QSeries p = bernoulli_core_series(static_cast<int>(k)).pow(n);
  return p.at(static_cast<int>(k)) * Rational(factorial(k));
}

Poly bernoulli_order_poly(unsigned k, unsigned n) {
  if (n < 1) throw std::invalid_argument("bernoulli_order_poly: order must be >= 1");
  const PSeries prod =
      exp_x_series(static_cast<int>(k)) * lift(bernoulli_core_series(static_cast<int>(k)).pow(n));
  return Rational(factorial(k)) * prod.at(static_cast<int>(k));
}

}  // namespace barneskit
