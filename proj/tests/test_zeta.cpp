#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "barneskit/bernoulli.hpp"
#include "barneskit/comb.hpp"
#include "barneskit/dedekind.hpp"
#include "barneskit/zeta.hpp"

#include <cmath>

using namespace barneskit;

namespace {
AVec av(const char* csv) { return AVec::parse(csv); }
}  // namespace

TEST_CASE("hurwitz zeta reference values") {
  CHECK(std::fabs(hurwitz_zeta(2.0, 1.0) - 1.6449340668482264) < 1e-10);
  CHECK(std::fabs(hurwitz_zeta(4.0, 1.0) - 1.0823232337111382) < 1e-12);  // pi^4/90
  CHECK(std::fabs(hurwitz_zeta(2.0, 0.5) - 4.9348022005446793) < 1e-10);  // pi^2/2
  CHECK(std::fabs(hurwitz_zeta(0.0, 0.25) - 0.25) < 1e-12);               // 1/2 - x
}

TEST_CASE("hurwitz zeta at negative integers hits Bernoulli polynomials") {
  for (unsigned k = 0; k <= 8; ++k)
    for (double x : {1.0 / 3.0, 0.5, 1.0, 2.25}) {
      const double expect =
          -(bernoulli_poly(k + 1).eval(Rational::from_double(x)) / Rational(k + 1)).to_double();
      CHECK(std::fabs(hurwitz_zeta(-static_cast<double>(k), x) - expect) < 1e-10);
    }
}

TEST_CASE("hurwitz zeta recurrence zeta(s;x) - zeta(s;x+1) = x^{-s}") {
  for (double s : {-2.5, -0.5, 0.5, 2.0, 3.5, 7.25})
    for (double x : {0.3, 1.0, 2.25}) {
      const double diff = hurwitz_zeta(s, x, 1e-12) - hurwitz_zeta(s, x + 1.0, 1e-12);
      CHECK(std::fabs(diff - std::pow(x, -s)) < 1e-10);
    }
}

TEST_CASE("hurwitz zeta domain errors") {
  CHECK_THROWS_AS(hurwitz_zeta(1.0, 2.0), std::domain_error);
  CHECK_THROWS_AS(hurwitz_zeta(2.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(hurwitz_zeta(2.0, -1.0), std::domain_error);
}

TEST_CASE("barnes zeta direct reduces to hurwitz") {
  for (double s : {1.5, 3.25})
    for (double x : {0.5, 1.0, 2.25})
      CHECK(std::fabs(barnes_zeta_direct(ZetaQuery{s, x, av("1"), 1e-11}) -
                      hurwitz_zeta(s, x, 1e-11)) < 1e-9);
  // a = (q): q^{-s} zeta(s; x/q), including a non-integer q
  for (double s : {2.5, 4.0}) {
    CHECK(std::fabs(barnes_zeta_direct(ZetaQuery{s, 1.0, av("3"), 1e-11}) -
                    std::pow(3.0, -s) * hurwitz_zeta(s, 1.0 / 3.0, 1e-11)) < 1e-9);
    CHECK(std::fabs(barnes_zeta_direct(ZetaQuery{s, 1.0, av("3/2"), 1e-11}) -
                    std::pow(1.5, -s) * hurwitz_zeta(s, 2.0 / 3.0, 1e-11)) < 1e-9);
  }
}

TEST_CASE("barnes zeta direct agrees with plain truncation at large s") {
  for (const char* a : {"1,2", "2,3", "1,2,3"}) {
    const AVec vec = av(a);
    const double s = static_cast<double>(vec.size()) + 3.0;
    for (double x : {0.5, 1.0, 2.25}) {
      const double em = barnes_zeta_direct(ZetaQuery{s, x, vec, 1e-10});
      const double raw = barnes_zeta_truncated(ZetaQuery{s, x, vec, 1e-8});
      CHECK(std::fabs(em - raw) < 3e-8);
    }
  }
}

TEST_CASE("barnes zeta preconditions") {
  CHECK_THROWS_AS(barnes_zeta_direct(ZetaQuery{2.0, 1.0, av("1,2"), 1e-9}), std::domain_error);
  CHECK_THROWS_AS(barnes_zeta_direct(ZetaQuery{3.0, 0.0, av("1,2"), 1e-9}), std::domain_error);
  CHECK_THROWS_AS(barnes_zeta_decomposed(ZetaQuery{2.0, 1.0, av("1,2"), 1e-9}),
                  std::domain_error);
  CHECK_THROWS_AS(barnes_zeta_decomposed(ZetaQuery{3.5, 1.0, av("2,4"), 1e-9}),
                  std::domain_error);
  CHECK_THROWS_AS(barnes_zeta_decomposed(ZetaQuery{3.5, 1.0, av("3/2,2"), 1e-9}),
                  std::domain_error);
}

TEST_CASE("direct vs decomposed dual path") {
  CHECK(std::fabs(barnes_zeta_direct(ZetaQuery{3.5, 1.0, av("1,2"), 2.5e-9}) -
                  barnes_zeta_decomposed(ZetaQuery{3.5, 1.0, av("1,2"), 2.5e-9})) < 1e-8);
  CHECK(std::fabs(barnes_zeta_direct(ZetaQuery{3.5, 1.0, av("2,3"), 2.5e-9}) -
                  barnes_zeta_decomposed(ZetaQuery{3.5, 1.0, av("2,3"), 2.5e-9})) < 1e-8);
}

TEST_CASE("decomposed matches the two-parameter fractional-part form") {
  // For coprime (a,b):
  //   (1/ab) zeta(s-1;x) + (1 - x/ab) zeta(s;x)
  //   - a^{-s} sum_{r<a} {b^{-1}r/a} zeta(s;(x+r)/a)
  //   - b^{-s} sum_{r<b} {a^{-1}r/b} zeta(s;(x+r)/b)
  const long a = 3, b = 5;
  for (double s : {3.5, 2.5})
    for (double x : {0.5, 1.0, 2.25}) {
      double rhs = hurwitz_zeta(s - 1.0, x, 1e-12) / (a * b) +
                   (1.0 - x / (a * b)) * hurwitz_zeta(s, x, 1e-12);
      const long binv = mod_inverse(b, a);
      for (long r = 0; r < a; ++r)
        rhs -= std::pow(a, -s) * Rational(mpz_class(binv * r), mpz_class(a)).frac().to_double() *
               hurwitz_zeta(s, (x + r) / a, 1e-12);
      const long ainv = mod_inverse(a, b);
      for (long r = 0; r < b; ++r)
        rhs -= std::pow(b, -s) * Rational(mpz_class(ainv * r), mpz_class(b)).frac().to_double() *
               hurwitz_zeta(s, (x + r) / b, 1e-12);
      CHECK(std::fabs(barnes_zeta_decomposed(ZetaQuery{s, x, av("3,5"), 1e-11}) - rhs) < 1e-9);
    }
}

TEST_CASE("special values at negative integers") {
  for (unsigned k = 0; k <= 6; ++k)
    for (const Rational& x : {Rational(1, 2), Rational(1), Rational(9, 4)})
      CHECK(barnes_zeta_special(k, x, av("1")) ==
            -(bernoulli_poly(k + 1).eval(x) / Rational(k + 1)));
  CHECK(barnes_zeta_special(0, Rational(1, 3), av("1,1")) ==
        Rational(1, 2) * bernoulli_order_poly(2, 2).eval(Rational(1, 3)));
}

TEST_CASE("decomposed at s = -k equals the exact special value") {
  for (const char* a : {"1,2", "2,3", "1,2,3"}) {
    const AVec vec = av(a);
    for (unsigned k = 0; k <= 3; ++k)
      for (double x : {0.5, 1.0, 2.25}) {
        const double exact =
            barnes_zeta_special(k, Rational::from_double(x), vec).to_double();
        const double viaz =
            barnes_zeta_decomposed(ZetaQuery{-static_cast<double>(k), x, vec, 1e-9});
        CHECK(std::fabs(exact - viaz) < 1e-7);
      }
  }
}

TEST_CASE("order-n hurwitz zeta") {
  for (double s : {0.5, 2.5, 4.5})
    for (double x : {0.5, 1.0})
      CHECK(std::fabs(hurwitz_order_n(s, x, 1, 1e-11) - hurwitz_zeta(s, x, 1e-11)) < 1e-9);
  CHECK(std::fabs(hurwitz_order_n_direct(4.5, 1.0, 2, 2.5e-9) -
                  hurwitz_order_n_weighted(4.5, 1.0, 2, 2.5e-9)) < 1e-8);
  // s = -m: (-1)^n m!/(m+n)! B^{(n)}_{m+n}(x)
  for (unsigned n = 1; n <= 3; ++n)
    for (unsigned m = 1; m <= 4; ++m)
      for (double x : {0.5, 1.0, 2.25}) {
        const Rational sign = (n % 2 == 0) ? Rational(1) : Rational(-1);
        const double expect = (sign * Rational(factorial(m), factorial(m + n)) *
                               bernoulli_order_poly(m + n, n).eval(Rational::from_double(x)))
                                  .to_double();
        CHECK(std::fabs(hurwitz_order_n(-static_cast<double>(m), x, n, 1e-10) - expect) < 1e-8);
      }
  CHECK_THROWS_AS(hurwitz_order_n(2.0, 1.0, 3, 1e-9), std::domain_error);
}
