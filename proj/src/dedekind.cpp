#include "barneskit/dedekind.hpp"

#include "barneskit/barnes.hpp"
#include "barneskit/bernoulli.hpp"
#include "barneskit/comb.hpp"
#include "barneskit/poly.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>

namespace barneskit {

PartitionSpec::PartitionSpec(std::vector<long> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("PartitionSpec: no parts");
  for (long p : parts_)
    if (p < 1) throw std::domain_error("PartitionSpec: parts must be >= 1");
}

bool PartitionSpec::pairwise_coprime() const {
  for (std::size_t i = 0; i < parts_.size(); ++i)
    for (std::size_t j = i + 1; j < parts_.size(); ++j)
      if (std::gcd(parts_[i], parts_[j]) != 1) return false;
  return true;
}

std::vector<mpz_class> partition_counts_upto(const PartitionSpec& spec, long tmax) {
  if (tmax < 0) throw std::invalid_argument("partition_counts_upto: negative bound");
  std::vector<mpz_class> dp(static_cast<std::size_t>(tmax) + 1, mpz_class(0));
  dp[0] = 1;
  for (long p : spec.parts())
    for (long t = p; t <= tmax; ++t) dp[static_cast<std::size_t>(t)] += dp[static_cast<std::size_t>(t - p)];
  return dp;
}

mpz_class partition_count_dp(const PartitionSpec& spec, long t) {
  if (t < 0) throw std::invalid_argument("partition_count_dp: negative t");
  return partition_counts_upto(spec, t).back();
}

long mod_inverse(long u, long m) {
  if (m < 1) throw std::domain_error("mod_inverse: modulus must be >= 1");
  if (m == 1) return 0;
  long a = ((u % m) + m) % m;
  if (std::gcd(a, m) != 1)
    throw std::domain_error("mod_inverse: " + std::to_string(u) + " is not invertible mod " +
                            std::to_string(m));
  long r0 = m, r1 = a, t0 = 0, t1 = 1;
  while (r1 != 0) {
    const long q = r0 / r1;
    std::tie(r0, r1) = std::pair<long, long>(r1, r0 - q * r1);
    std::tie(t0, t1) = std::pair<long, long>(t1, t0 - q * t1);
  }
  return ((t0 % m) + m) % m;
}

mpz_class popoviciu(long a, long b, long t) {
  if (a < 1 || b < 1) throw std::domain_error("popoviciu: parts must be >= 1");
  if (std::gcd(a, b) != 1) throw std::domain_error("popoviciu: parts must be coprime");
  if (t < 0) throw std::invalid_argument("popoviciu: negative t");
  const mpz_class binv(mod_inverse(b, a));
  const mpz_class ainv(mod_inverse(a, b));
  const Rational v = Rational(mpz_class(t), mpz_class(a) * b) + Rational(1) -
                     Rational(binv * t, mpz_class(a)).frac() -
                     Rational(ainv * t, mpz_class(b)).frac();
  if (!v.is_integer() || v.sign() < 0)
    throw std::logic_error("popoviciu: non-integral result " + v.str());
  return v.num();
}

namespace {

// Arithmetic in Q[x]/(1 + x + ... + x^{a-1}); representatives have degree
// <= a-2. Uses x^a = 1 followed by folding the x^{a-1} term.
class QuotientRing {
 public:
  explicit QuotientRing(long a) : a_(a) {}

  std::vector<Rational> reduce(const std::vector<Rational>& c) const {
    std::vector<Rational> r(static_cast<std::size_t>(a_), Rational());
    for (std::size_t i = 0; i < c.size(); ++i)
      r[i % static_cast<std::size_t>(a_)] += c[i];
    const Rational top = r.back();
    r.pop_back();
    if (!top.is_zero())
      for (auto& v : r) v -= top;
    return r;
  }

  std::vector<Rational> mul(const std::vector<Rational>& f, const std::vector<Rational>& g) const {
    std::vector<Rational> prod(f.size() + g.size(), Rational());
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (f[i].is_zero()) continue;
      for (std::size_t j = 0; j < g.size(); ++j) prod[i + j] += f[i] * g[j];
    }
    return reduce(prod);
  }

  // Inverse of f modulo 1 + x + ... + x^{a-1} via the extended Euclidean
  // algorithm; f must be coprime to the modulus.
  std::vector<Rational> inverse(const std::vector<Rational>& f) const {
    std::vector<Rational> phi(static_cast<std::size_t>(a_), Rational(1));
    Poly r0 = Poly::from_coeffs(phi);
    Poly r1 = Poly::from_coeffs(f);
    Poly t0, t1 = Poly(Rational(1));
    while (!r1.is_zero()) {
      auto [q, rem] = poly_divmod(r0, r1);
      r0 = r1;
      r1 = rem;
      Poly tn = t0 - q * t1;
      t0 = t1;
      t1 = std::move(tn);
    }
    if (r0.degree() != 0)
      throw std::domain_error("quotient ring: element is not invertible");
    const Poly inv = r0.coeff(0).reciprocal() * t0;
    std::vector<Rational> c = inv.coeffs();
    return reduce(c);
  }

 private:
  long a_;
};

std::mutex sigma_mu;
std::map<std::string, Rational> sigma_cache;

std::string sigma_key(long r, const std::vector<long>& others_sorted, long a) {
  std::string k = std::to_string(r) + "|";
  for (std::size_t i = 0; i < others_sorted.size(); ++i) {
    if (i) k += ",";
    k += std::to_string(others_sorted[i]);
  }
  return k + "|" + std::to_string(a);
}

void validate_fds(const FdsKey& key) {
  if (key.modulus < 1) throw std::domain_error("fourier_dedekind: modulus must be >= 1");
  for (long o : key.others) {
    if (o < 1) throw std::domain_error("fourier_dedekind: parameters must be >= 1");
    if (std::gcd(o, key.modulus) != 1)
      throw std::domain_error("fourier_dedekind: parameter " + std::to_string(o) +
                              " is not coprime to the modulus " + std::to_string(key.modulus));
  }
}

}  // namespace

Rational fourier_dedekind_exact(const FdsKey& key) {
  validate_fds(key);
  const long a = key.modulus;
  if (a == 1) return Rational();  // no nontrivial roots of unity
  const long r = ((key.r % a) + a) % a;

  std::vector<long> others_sorted = key.others;
  std::sort(others_sorted.begin(), others_sorted.end());
  const std::string ck = sigma_key(r, others_sorted, a);
  {
    std::lock_guard<std::mutex> g(sigma_mu);
    auto it = sigma_cache.find(ck);
    if (it != sigma_cache.end()) return it->second;
  }

  const QuotientRing ring(a);
  std::vector<Rational> f(static_cast<std::size_t>(r) + 1, Rational());
  f.back() = Rational(1);
  f = ring.reduce(f);
  for (long o : others_sorted) {
    // 1 - x^{o mod a}; o mod a != 0 since gcd(o, a) = 1 and a > 1
    std::vector<Rational> g(static_cast<std::size_t>(o % a) + 1, Rational());
    g.front() = Rational(1);
    g.back() -= Rational(1);
    f = ring.mul(f, ring.inverse(ring.reduce(g)));
  }
  // With f = sum c_i x^i reduced (degree <= a-2) and S the set of
  // nontrivial a-th roots of unity: sum_{lambda in S} lambda^i = a[a|i] - 1,
  // so sum_{lambda} f(lambda) = a c_0 - f(1).
  Rational f_at_1;
  for (const auto& c : f) f_at_1 += c;
  const Rational sigma = (Rational(a) * f[0] - f_at_1) / Rational(a);

  std::lock_guard<std::mutex> g(sigma_mu);
  sigma_cache.emplace(ck, sigma);
  return sigma;
}

double fourier_dedekind_float(const FdsKey& key) {
  validate_fds(key);
  const long a = key.modulus;
  if (a == 1) return 0.0;
  const long r = ((key.r % a) + a) % a;
  const double two_pi = 2.0 * std::acos(-1.0);
  std::complex<double> acc(0.0, 0.0);
  for (long k = 1; k < a; ++k) {
    const double theta = two_pi * static_cast<double>(k) / static_cast<double>(a);
    std::complex<double> term = std::polar(1.0, theta * static_cast<double>(r));
    for (long o : key.others)
      term /= 1.0 - std::polar(1.0, theta * static_cast<double>(o));
    acc += term;
  }
  return acc.real() / static_cast<double>(a);
}

Rational partition_count_closed_value(const PartitionSpec& spec, long t) {
  if (t < 0) throw std::invalid_argument("partition_count_closed: negative t");
  if (!spec.pairwise_coprime())
    throw std::domain_error("partition_count_closed: parts must be pairwise coprime");
  const std::size_t n = spec.size();
  std::vector<Rational> entries;
  entries.reserve(n);
  for (long p : spec.parts()) entries.emplace_back(p);
  const AVec a(entries);

  // (-1)^{n-1}/(n-1)! B_{n-1}(-t; a) + sum_j sigma_{-t}(..., a_j-hat; a_j)
  const Rational sign = (n % 2 == 1) ? Rational(1) : Rational(-1);
  Rational acc = sign * Rational(mpz_class(1), factorial(static_cast<unsigned long>(n) - 1)) *
                 barnes_poly_family(static_cast<unsigned>(n) - 1, a)[n - 1].eval(Rational(-t));
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<long> others = spec.parts();
    others.erase(others.begin() + static_cast<std::ptrdiff_t>(j));
    acc += fourier_dedekind_exact(FdsKey{-t, others, spec.parts()[j]});
  }
  return acc;
}

mpz_class partition_count_closed(const PartitionSpec& spec, long t) {
  const Rational v = partition_count_closed_value(spec, t);
  if (!v.is_integer() || v.sign() < 0)
    throw std::logic_error("partition_count_closed: non-integral value " + v.str());
  const mpz_class dp = partition_count_dp(spec, t);
  if (v.num() != dp)
    throw std::logic_error("partition_count_closed: closed form " + v.str() +
                           " disagrees with DP count " + dp.get_str() + " at t=" +
                           std::to_string(t));
  return v.num();
}

Rational sigma_ones_closed(long t, unsigned n_ones, long a) {
  if (a < 1) throw std::domain_error("sigma_ones_closed: modulus must be >= 1");
  if (n_ones < 1) throw std::invalid_argument("sigma_ones_closed: needs at least one 1");
  std::vector<Rational> entries(n_ones + 1, Rational(1));
  entries[0] = Rational(a);
  const AVec ahat(entries);  // (a, 1, ..., 1), n_ones + 1 entries
  const long rem = ((t % a) + a) % a;
  const Rational x = (rem != 0) ? Rational(rem) : Rational(a);
  const Rational sign = (n_ones % 2 == 1) ? Rational(1) : Rational(-1);
  return sign * Rational(mpz_class(1), factorial(n_ones)) *
         barnes_poly_family(n_ones, ahat)[n_ones].eval(x);
}

Rational apostol_sum(unsigned m, long a, long b) {
  if (a < 1 || b < 1) throw std::domain_error("apostol_sum: parameters must be >= 1");
  if (std::gcd(a, b) != 1) throw std::domain_error("apostol_sum: parameters must be coprime");
  const mpz_class ainv(mod_inverse(a, b));
  const Poly bm = bernoulli_poly(m);
  Rational acc;
  for (long r = 0; r < a; ++r)
    acc += Rational(ainv * r, mpz_class(b)).frac() * bm.eval(Rational(r, b));
  return acc;
}

}  // namespace barneskit
