#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "barneskit/comb.hpp"
#include "barneskit/poly.hpp"
#include "barneskit/rational.hpp"
#include "barneskit/series.hpp"

#include <random>

using namespace barneskit;

TEST_CASE("rational canonical form and parsing") {
  CHECK(Rational(6, 4).str() == "3/2");
  CHECK(Rational(-6, 4).str() == "-3/2");
  CHECK(Rational(6, -4).str() == "-3/2");
  CHECK(Rational(0, 7).str() == "0");
  CHECK(Rational(0, 7).den() == 1);
  CHECK(Rational::from_string("-3/4").str() == "-3/4");
  CHECK(Rational::from_string("5").str() == "5");
  CHECK(Rational::from_string("10/4").str() == "5/2");
  CHECK_THROWS_AS(Rational::from_string("3/"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("a"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("3/0"), std::domain_error);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational arithmetic stays canonical") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const Rational a(static_cast<long>(rng() % 41) - 20, static_cast<long>(rng() % 9) + 1);
    const Rational b(static_cast<long>(rng() % 41) - 20, static_cast<long>(rng() % 9) + 1);
    for (const Rational& v : {a + b, a - b, a * b}) {
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), v.num().get_mpz_t(), v.den().get_mpz_t());
      CHECK(g == 1);
      CHECK(v.den() > 0);
    }
  }
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
}

TEST_CASE("rational floor and fractional part") {
  CHECK(Rational(7, 2).floor() == 3);
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(-1, 3).frac() == Rational(2, 3));
  CHECK(Rational(5, 3).frac() == Rational(2, 3));
  CHECK(Rational(4).frac() == Rational(0));
  CHECK(Rational::from_double(0.5) == Rational(1, 2));
  CHECK(Rational::from_double(2.25) == Rational(9, 4));
  CHECK(Rational::from_double(1.0) == Rational(1));
}

TEST_CASE("binomial conventions") {
  CHECK(binomial(5, 2) == Rational(10));
  CHECK(binomial(3, -1) == Rational(0));
  CHECK(binomial(-1, 0) == Rational(1));
  CHECK(binomial(-1, 3) == Rational(-1));
  CHECK(binomial(-2, 2) == Rational(3));
  CHECK(binomial(4, 7) == Rational(0));
}

TEST_CASE("binomial satisfies Pascal's rule, negative tops included") {
  for (long n = -6; n <= 8; ++n)
    for (long k = -2; k <= 9; ++k)
      CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("stirling numbers of the first kind") {
  CHECK(stirling_first(3, 2) == -3);
  CHECK(stirling_first(4, 1) == -6);
  for (unsigned n = 0; n <= 12; ++n) CHECK(stirling_first(n, n) == 1);

  // sum_k s(n,k) x^k equals the falling factorial x(x-1)...(x-n+1)
  for (unsigned n = 0; n <= 12; ++n) {
    Poly falling(Rational(1));
    for (unsigned i = 0; i < n; ++i)
      falling = falling * Poly::from_coeffs({Rational(-static_cast<long>(i)), Rational(1)});
    std::vector<Rational> c(n + 1);
    for (unsigned k = 0; k <= n; ++k) c[k] = Rational(stirling_first(n, k));
    CHECK(Poly::from_coeffs(c) == falling);
  }
}

TEST_CASE("poly basics") {
  const Poly p = Poly::from_coeffs({Rational(-1), Rational(0), Rational(1)});  // x^2 - 1
  CHECK(p.eval(Rational(3, 2)) == Rational(5, 4));
  CHECK(Poly::monomial(2).shift(Rational(1)) ==
        Poly::from_coeffs({Rational(1), Rational(2), Rational(1)}));
  CHECK(p.degree() == 2);
  CHECK(Poly().degree() == -1);
  CHECK(Poly::from_coeffs({Rational(1), Rational(2)}).reflect() ==
        Poly::from_coeffs({Rational(1), Rational(-2)}));
  const Poly q = Poly::from_coeffs({Rational(1), Rational(1), Rational(1)});
  CHECK(q.compose_affine(Rational(2), Rational(-1)).eval(Rational(3)) ==
        q.eval(Rational(5)));
}

TEST_CASE("poly divmod") {
  const Poly num = Poly::from_coeffs({Rational(2), Rational(0), Rational(0), Rational(1)});
  const Poly den = Poly::from_coeffs({Rational(1), Rational(1)});
  const auto [q, r] = poly_divmod(num, den);
  CHECK(q * den + r == num);
  CHECK(r.degree() < den.degree());
}

TEST_CASE("poly interpolation reproduces values") {
  const std::vector<Rational> xs = {Rational(0), Rational(1), Rational(2), Rational(5)};
  const std::vector<Rational> ys = {Rational(3), Rational(1, 2), Rational(-4), Rational(7)};
  const Poly p = poly_interpolate(xs, ys);
  for (std::size_t i = 0; i < xs.size(); ++i) CHECK(p.eval(xs[i]) == ys[i]);
  CHECK(p.degree() <= 3);
}

TEST_CASE("series invert examples") {
  QSeries s(2);
  s.set(0, Rational(1));
  s.set(1, Rational(1));
  const QSeries t = s.invert();  // 1 - z + z^2
  CHECK(t.at(0) == Rational(1));
  CHECK(t.at(1) == Rational(-1));
  CHECK(t.at(2) == Rational(1));

  QSeries c(0);
  c.set(0, Rational(2));
  CHECK(c.invert().at(0) == Rational(1, 2));

  QSeries u(2);
  u.set(0, Rational(1));
  u.set(1, Rational(1));
  u.set(2, Rational(1, 2));
  const QSeries v = u.invert();
  CHECK(v.at(0) == Rational(1));
  CHECK(v.at(1) == Rational(-1));
  CHECK(v.at(2) == Rational(1, 2));
  // multiply back: 1 + O(z^3)
  const QSeries prod = u * v;
  CHECK(prod.at(0) == Rational(1));
  CHECK(prod.at(1) == Rational(0));
  CHECK(prod.at(2) == Rational(0));
}

TEST_CASE("series invert rejects non-unit constant term") {
  QSeries s(3);
  s.set(1, Rational(1));  // z has no inverse as a power series
  CHECK_THROWS_AS(s.invert(), std::domain_error);

  PSeries p(2);
  p.set(0, Poly::monomial(1));  // constant term of positive degree
  CHECK_THROWS_AS(p.invert(), std::domain_error);
}

TEST_CASE("series mul/pow and truncation order") {
  QSeries s(3);
  s.set(0, Rational(1));
  s.set(1, Rational(1));
  const QSeries sq = s.pow(2);
  CHECK(sq.at(0) == Rational(1));
  CHECK(sq.at(1) == Rational(2));
  CHECK(sq.at(2) == Rational(1));
  CHECK(sq.at(3) == Rational(0));

  QSeries a(5), b(2);
  a.set(0, Rational(1));
  b.set(0, Rational(1));
  CHECK((a * b).order() == 2);
  CHECK((a + b).order() == 2);
}

TEST_CASE("series mul-invert property on random series") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const int order = 1 + static_cast<int>(rng() % 8);
    QSeries s(order);
    s.set(0, Rational(1 + static_cast<long>(rng() % 5)));
    for (int i = 1; i <= order; ++i)
      s.set(i, Rational(static_cast<long>(rng() % 11) - 5, 1 + static_cast<long>(rng() % 4)));
    const QSeries prod = s * s.invert();
    CHECK(prod.at(0) == Rational(1));
    for (int i = 1; i <= order; ++i) CHECK(prod.at(i) == Rational(0));
  }
}

TEST_CASE("series over Poly coefficients") {
  // e^{xz}-style series: coefficients x^j / j!
  PSeries e(2);
  e.set(0, Poly(Rational(1)));
  e.set(1, Poly::monomial(1));
  e.set(2, Rational(1, 2) * Poly::monomial(2));
  const PSeries sq = e * e;  // coefficients (2x)^j / j!
  CHECK(sq.at(1) == Rational(2) * Poly::monomial(1));
  CHECK(sq.at(2) == Rational(2) * Poly::monomial(2));
}

TEST_CASE("series mul-invert property over the Poly ring") {
  std::mt19937_64 rng(2024);
  auto rnd_rat = [&] {
    return Rational(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 3));
  };
  for (int trial = 0; trial < 25; ++trial) {
    const int order = 1 + static_cast<int>(rng() % 6);
    PSeries s(order);
    s.set(0, Poly(Rational(1 + static_cast<long>(rng() % 4))));
    for (int i = 1; i <= order; ++i) {
      std::vector<Rational> coeffs(1 + rng() % 3);
      for (auto& c : coeffs) c = rnd_rat();
      s.set(i, Poly::from_coeffs(std::move(coeffs)));
    }
    const PSeries prod = s * s.invert();
    CHECK(prod.at(0) == Poly(Rational(1)));
    for (int i = 1; i <= order; ++i) CHECK(prod.at(i).is_zero());
  }
}
