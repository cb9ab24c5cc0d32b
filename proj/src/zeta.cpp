#include "barneskit/zeta.hpp"

#include "barneskit/bernoulli.hpp"
#include "barneskit/comb.hpp"
#include "barneskit/dedekind.hpp"
#include "barneskit/poly.hpp"

#include <cmath>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace barneskit {

namespace {

double bern_over_fact(unsigned two_j) {
  // B_{2j}/(2j)! as double
  static std::mutex mu;
  static std::vector<double> cache;  // index j
  const unsigned j = two_j / 2;
  std::lock_guard<std::mutex> g(mu);
  while (cache.size() <= j) {
    const unsigned jj = static_cast<unsigned>(cache.size());
    cache.push_back((bernoulli_number(2 * jj) / Rational(factorial(2 * jj))).to_double());
  }
  return cache[j];
}

struct WeightedCall {
  double weight;
  double s;
  double x;
};

double accumulate_calls(double base, const std::vector<WeightedCall>& calls, double tol) {
  double wsum = 0.0;
  for (const auto& c : calls) wsum += std::fabs(c.weight);
  const double tol_each = wsum > 0.0 ? std::max(tol / (2.0 * wsum), 1e-15) : tol;
  double acc = base;
  for (const auto& c : calls) acc += c.weight * hurwitz_zeta(c.s, c.x, tol_each);
  return acc;
}

}  // namespace

double hurwitz_zeta(double s, double x, double target_abs_err) {
  if (!(x > 0.0)) throw std::domain_error("hurwitz_zeta: requires x > 0");
  if (std::fabs(s - 1.0) < 1e-12) throw std::domain_error("hurwitz_zeta: pole at s = 1");
  if (!(target_abs_err > 0.0)) throw std::invalid_argument("hurwitz_zeta: tolerance must be > 0");
  if (s < -300.0) throw std::domain_error("hurwitz_zeta: s below supported range");

  int depth = 12;  // pairs of Euler-Maclaurin correction terms
  if (s < 0.0) depth = std::max(depth, static_cast<int>(std::ceil((-s + 3.0) / 2.0)));

  auto term_magnitude = [&](double big_x, int j) {
    double prod = 1.0;
    for (int i = 0; i <= 2 * j - 2; ++i) prod *= std::fabs(s + i);
    return std::fabs(bern_over_fact(static_cast<unsigned>(2 * j))) * prod *
           std::pow(big_x, 1.0 - s - 2.0 * j);
  };

  // Shift only until the first omitted correction term (which bounds the
  // remainder for real s with s + 2*depth + 1 > 0) is within budget. The
  // minimal shift also minimizes cancellation at negative s, where the
  // explicit terms grow like (x+m)^{-s}.
  long shift = 0;
  while (term_magnitude(x + static_cast<double>(shift), depth + 1) > 0.5 * target_abs_err) {
    shift += std::max<long>(4, shift / 2);
    if (shift > 50'000'000) throw std::domain_error("hurwitz_zeta: tolerance unreachable");
  }

  double acc = 0.0;
  for (long m = 0; m < shift; ++m) acc += std::pow(x + static_cast<double>(m), -s);
  const double big_x = x + static_cast<double>(shift);
  acc += std::pow(big_x, 1.0 - s) / (s - 1.0);
  acc += 0.5 * std::pow(big_x, -s);
  double coef = s;                             // prod_{i=0}^{2j-2} (s+i)
  double xpow = std::pow(big_x, -s - 1.0);     // big_x^{1-s-2j}
  for (int j = 1; j <= depth; ++j) {
    acc += bern_over_fact(static_cast<unsigned>(2 * j)) * coef * xpow;
    coef *= (s + 2.0 * j - 1.0) * (s + 2.0 * j);
    xpow /= big_x * big_x;
  }
  return acc;
}

namespace {

// Core evaluator over integer parts. Splits sum_t p_A(t) (x+t)^{-s} into a
// short explicit block plus, per residue class rho mod L = lcm(parts), the
// exact degree-(n-1) polynomial P_rho with p_A(rho + qL) = P_rho(q); the
// class tail is then a finite combination of Hurwitz zetas.
double barnes_zeta_lattice(double s, const Rational& x, const std::vector<long>& parts,
                           double tol) {
  const std::size_t n = parts.size();
  long lcm = 1;
  for (long p : parts) {
    lcm = std::lcm(lcm, p);
    if (lcm > 1'000'000) throw std::domain_error("barnes zeta: lcm of parts too large");
  }
  const long q0 = 2;
  const long q_check = q0 + static_cast<long>(n) + 1;
  const long tmax = (q_check + 1) * lcm - 1;
  const PartitionSpec spec(parts);
  const std::vector<mpz_class> counts = partition_counts_upto(spec, tmax);

  const double xd = x.to_double();
  double raw = 0.0;
  for (long t = 0; t < q0 * lcm; ++t) {
    const auto& c = counts[static_cast<std::size_t>(t)];
    if (c != 0) raw += c.get_d() * std::pow(xd + static_cast<double>(t), -s);
  }

  std::vector<WeightedCall> calls;
  for (long rho = 0; rho < lcm; ++rho) {
    std::vector<Rational> qs, ys;
    for (std::size_t i = 0; i < n; ++i) {
      const long q = q0 + static_cast<long>(i);
      qs.emplace_back(q);
      ys.emplace_back(counts[static_cast<std::size_t>(rho + q * lcm)]);
    }
    const Poly interp = poly_interpolate(qs, ys);
    for (long q : {q0 + static_cast<long>(n), q0 + static_cast<long>(n) + 1}) {
      if (interp.eval(Rational(q)) !=
          Rational(counts[static_cast<std::size_t>(rho + q * lcm)]))
        throw std::logic_error("barnes zeta: residue-class counts are not polynomial");
    }
    // x + rho + qL = L*(c + q) with c = (x + rho)/L; rewrite P in u = q + c.
    const Rational c = (x + Rational(rho)) / Rational(lcm);
    const Poly in_u = interp.shift(-c);
    const double arg = (c + Rational(q0)).to_double();
    // x + rho + qL = L*u with u = q + c, so each power u^k contributes
    // L^{-s} zeta(s-k; c + q0).
    const double lcm_pow = std::pow(static_cast<double>(lcm), -s);
    for (int k = 0; k <= in_u.degree(); ++k) {
      const Rational& w = in_u.coeffs()[static_cast<std::size_t>(k)];
      if (w.is_zero()) continue;
      calls.push_back({w.to_double() * lcm_pow, s - k, arg});
    }
  }
  return accumulate_calls(raw, calls, tol);
}

// Clears denominators: zeta_n(s, x; a) = D^s zeta_n(s, Dx; Da).
std::pair<std::vector<long>, Rational> integer_scaled(const AVec& a, double x, mpz_class* d_out) {
  mpz_class d(1);
  for (const auto& e : a.entries()) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), e.den().get_mpz_t());
  std::vector<long> parts;
  parts.reserve(a.size());
  for (const auto& e : a.entries()) parts.push_back((e * Rational(d)).to_long());
  *d_out = d;
  return {parts, Rational::from_double(x) * Rational(d)};
}

}  // namespace

double barnes_zeta_direct(const ZetaQuery& q) {
  const std::size_t n = q.a.size();
  if (!(q.x > 0.0)) throw std::domain_error("barnes zeta: requires x > 0");
  if (!(q.s > static_cast<double>(n)))
    throw std::domain_error("barnes_zeta_direct: requires s > n = " + std::to_string(n));
  mpz_class d;
  const auto [parts, xr] = integer_scaled(q.a, q.x, &d);
  const double scale = std::pow(d.get_d(), q.s);
  return scale * barnes_zeta_lattice(q.s, xr, parts, q.target_abs_err / scale);
}

double barnes_zeta_truncated(const ZetaQuery& q) {
  const std::size_t n = q.a.size();
  if (!(q.x > 0.0)) throw std::domain_error("barnes zeta: requires x > 0");
  if (!(q.s > static_cast<double>(n)))
    throw std::domain_error("barnes_zeta_truncated: requires s > n");
  mpz_class d;
  const auto [parts, xr] = integer_scaled(q.a, q.x, &d);
  const double scale = std::pow(d.get_d(), q.s);
  const double tol = q.target_abs_err / scale;
  const double s = q.s;
  // tail(T) <= 2^{n-1}/(n-1)! * T^{n-s}/(s-n) for T >= n
  const double c = std::pow(2.0, static_cast<double>(n) - 1.0) / factorial(n - 1).get_d();
  const double need = std::pow(c / (tol * (s - static_cast<double>(n))),
                               1.0 / (s - static_cast<double>(n)));
  if (!(need < 3e6))
    throw std::domain_error("barnes_zeta_truncated: tolerance unreachable by truncation");
  const long big_t = std::max<long>(static_cast<long>(n) + 1, static_cast<long>(std::ceil(need)));
  const std::vector<mpz_class> counts = partition_counts_upto(PartitionSpec(parts), big_t);
  const double xd = xr.to_double();
  double acc = 0.0;
  for (long t = 0; t <= big_t; ++t) {
    const auto& pc = counts[static_cast<std::size_t>(t)];
    if (pc != 0) acc += pc.get_d() * std::pow(xd + static_cast<double>(t), -s);
  }
  return scale * acc;
}

double barnes_zeta_decomposed(const ZetaQuery& q) {
  const std::size_t n = q.a.size();
  if (!(q.x > 0.0)) throw std::domain_error("barnes zeta: requires x > 0");
  std::vector<long> parts;
  try {
    parts = q.a.as_integers();
  } catch (const std::exception&) {
    throw std::domain_error("barnes_zeta_decomposed: requires integer entries");
  }
  if (!q.a.pairwise_coprime())
    throw std::domain_error("barnes_zeta_decomposed: requires pairwise coprime entries");
  const double rounded = std::round(q.s);
  if (std::fabs(q.s - rounded) < 1e-9 && rounded >= 1.0 && rounded <= static_cast<double>(n))
    throw std::domain_error("barnes_zeta_decomposed: pole at s in {1,...,n}");

  const Rational xr = Rational::from_double(q.x);
  std::vector<WeightedCall> calls;

  const auto family = barnes_poly_family(static_cast<unsigned>(n) - 1, q.a);
  const Rational lead_sign = (n % 2 == 1) ? Rational(1) : Rational(-1);  // (-1)^{n-1}
  const Rational pre = lead_sign / Rational(factorial(n - 1));
  for (std::size_t k = 0; k < n; ++k) {
    const Rational alt = (k % 2 == 0) ? Rational(1) : Rational(-1);
    const Rational w = pre * alt * binomial(static_cast<long>(n) - 1, static_cast<long>(k)) *
                       family[n - 1 - k].eval(xr);
    if (!w.is_zero())
      calls.push_back({w.to_double(), q.s - static_cast<double>(k), q.x});
  }

  for (std::size_t j = 0; j < n; ++j) {
    const long aj = parts[j];
    if (aj == 1) continue;  // modulus 1: sigma vanishes
    std::vector<long> others = parts;
    others.erase(others.begin() + static_cast<std::ptrdiff_t>(j));
    const double aj_pow = std::pow(static_cast<double>(aj), -q.s);
    for (long r = 0; r < aj; ++r) {
      const Rational sigma = fourier_dedekind_exact(FdsKey{-r, others, aj});
      if (sigma.is_zero()) continue;
      calls.push_back({sigma.to_double() * aj_pow, q.s,
                       (q.x + static_cast<double>(r)) / static_cast<double>(aj)});
    }
  }
  return accumulate_calls(0.0, calls, q.target_abs_err);
}

Rational barnes_zeta_special(unsigned k, const Rational& x, const AVec& a) {
  const std::size_t n = a.size();
  const Rational sign = (n % 2 == 0) ? Rational(1) : Rational(-1);
  return sign * Rational(factorial(k), factorial(k + static_cast<unsigned long>(n))) *
         barnes_poly_family(k + static_cast<unsigned>(n), a)[k + n].eval(x);
}

double hurwitz_order_n_direct(double s, double x, unsigned n, double target_abs_err) {
  if (n < 1) throw std::invalid_argument("hurwitz_order_n: n must be >= 1");
  if (!(s > static_cast<double>(n)))
    throw std::domain_error("hurwitz_order_n_direct: requires s > n");
  if (!(x > 0.0)) throw std::domain_error("hurwitz_order_n: requires x > 0");
  return barnes_zeta_lattice(s, Rational::from_double(x), std::vector<long>(n, 1),
                             target_abs_err);
}

double hurwitz_order_n_weighted(double s, double x, unsigned n, double target_abs_err) {
  if (n < 1) throw std::invalid_argument("hurwitz_order_n: n must be >= 1");
  if (!(x > 0.0)) throw std::domain_error("hurwitz_order_n: requires x > 0");
  const double rounded = std::round(s);
  if (std::fabs(s - rounded) < 1e-9 && rounded >= 1.0 && rounded <= static_cast<double>(n))
    throw std::domain_error("hurwitz_order_n: pole at s in {1,...,n}");
  const Rational xr = Rational::from_double(x);
  const Rational lead_sign = (n % 2 == 1) ? Rational(1) : Rational(-1);
  const Rational pre = lead_sign / Rational(factorial(n - 1));
  std::vector<WeightedCall> calls;
  for (unsigned k = 0; k < n; ++k) {
    const Rational alt = (k % 2 == 0) ? Rational(1) : Rational(-1);
    const Rational w = pre * alt * binomial(static_cast<long>(n) - 1, static_cast<long>(k)) *
                       bernoulli_order_poly(n - 1 - k, n).eval(xr);
    if (!w.is_zero()) calls.push_back({w.to_double(), s - static_cast<double>(k), x});
  }
  return accumulate_calls(0.0, calls, target_abs_err);
}

double hurwitz_order_n(double s, double x, unsigned n, double target_abs_err) {
  if (s > static_cast<double>(n)) return hurwitz_order_n_direct(s, x, n, target_abs_err);
  return hurwitz_order_n_weighted(s, x, n, target_abs_err);
}

}  // namespace barneskit
