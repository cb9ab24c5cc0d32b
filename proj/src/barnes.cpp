#include "barneskit/barnes.hpp"

#include "barneskit/bernoulli.hpp"
#include "barneskit/comb.hpp"
#include "barneskit/series.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace barneskit {

AVec::AVec(std::vector<Rational> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw std::invalid_argument("AVec: empty parameter vector");
  for (const auto& e : entries_)
    if (e.sign() <= 0) throw std::domain_error("AVec: entries must be positive, got " + e.str());
}

AVec AVec::parse(std::string_view csv) {
  std::vector<Rational> entries;
  std::size_t pos = 0;
  while (pos <= csv.size()) {
    std::size_t comma = csv.find(',', pos);
    if (comma == std::string_view::npos) comma = csv.size();
    entries.push_back(Rational::from_string(csv.substr(pos, comma - pos)));
    pos = comma + 1;
    if (comma == csv.size()) break;
  }
  return AVec(std::move(entries));
}

AVec AVec::ones(std::size_t n) { return AVec(std::vector<Rational>(n, Rational(1))); }

Rational AVec::sum() const {
  Rational s;
  for (const auto& e : entries_) s += e;
  return s;
}

Rational AVec::product() const {
  Rational p(1);
  for (const auto& e : entries_) p *= e;
  return p;
}

bool AVec::all_integers() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Rational& e) { return e.is_integer(); });
}

std::vector<long> AVec::as_integers() const {
  std::vector<long> v;
  v.reserve(entries_.size());
  for (const auto& e : entries_) v.push_back(e.to_long());
  return v;
}

bool AVec::pairwise_coprime() const {
  const auto v = as_integers();
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (std::gcd(v[i], v[j]) != 1) return false;
  return true;
}

AVec AVec::subset(const std::vector<std::size_t>& idx) const {
  std::vector<Rational> sub;
  sub.reserve(idx.size());
  for (std::size_t i : idx) sub.push_back(entries_.at(i));
  return AVec(std::move(sub));
}

AVec AVec::without(std::size_t idx) const {
  std::vector<Rational> sub;
  sub.reserve(entries_.size() - 1);
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (i != idx) sub.push_back(entries_[i]);
  return AVec(std::move(sub));
}

std::string AVec::str() const {
  std::string s;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) s += ",";
    s += entries_[i].str();
  }
  return s;
}

std::string AVec::sorted_key() const {
  std::vector<Rational> sorted = entries_;
  std::sort(sorted.begin(), sorted.end());
  std::string s;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i) s += ",";
    s += sorted[i].str();
  }
  return s;
}

namespace {

// z^n / prod_i (e^{a_i z} - 1) = prod_i [z / (e^{a_i z} - 1)].
QSeries barnes_core_series(int order, const AVec& a) {
  QSeries prod = QSeries::one(order);
  for (const auto& ai : a.entries()) {
    QSeries e(order);
    // (e^{a z} - 1)/z = sum_j a^{j+1} z^j/(j+1)!
    for (int j = 0; j <= order; ++j)
      e.set(j, ai.pow(j + 1) * Rational(mpz_class(1), factorial(static_cast<unsigned long>(j) + 1)));
    prod = prod * e.invert();
  }
  return prod;
}

struct BarnesCaches {
  std::mutex mu;
  std::map<std::string, std::vector<Rational>> numbers;  // checked values, index k
  std::map<std::string, std::vector<Poly>> polys;        // B_k(x;a), index k
};

BarnesCaches& caches() {
  static BarnesCaches c;
  return c;
}

// Convolution sum over compositions m_1+...+m_n = k restricted to indices
// where B_{m_i} != 0 (m_i in {0,1} or even).
void convolution_rec(const std::vector<Rational>& a, std::size_t pos, unsigned remaining,
                     const Rational& partial, Rational& acc) {
  if (pos + 1 == a.size()) {
    const unsigned m = remaining;
    if (m >= 3 && m % 2 == 1) return;
    acc += partial * a[pos].pow(static_cast<long>(m) - 1) * bernoulli_number(m) /
           Rational(factorial(m));
    return;
  }
  for (unsigned m = 0; m <= remaining; ++m) {
    if (m >= 3 && m % 2 == 1) continue;
    const Rational b = bernoulli_number(m);
    if (b.is_zero()) continue;
    convolution_rec(a, pos + 1, remaining - m,
                    partial * a[pos].pow(static_cast<long>(m) - 1) * b / Rational(factorial(m)),
                    acc);
  }
}

}  // namespace

Rational barnes_number_series(unsigned k, const AVec& a) {
  return barnes_core_series(static_cast<int>(k), a).at(static_cast<int>(k)) *
         Rational(factorial(k));
}

Rational barnes_number_convolution(unsigned k, const AVec& a) {
  // B_k(a) = sum_{m_1+...+m_n=k} C(k;m_1,...,m_n) prod a_i^{m_i-1} B_{m_i}
  //        = k! sum prod (a_i^{m_i-1} B_{m_i} / m_i!)
  Rational acc;
  convolution_rec(a.entries(), 0, k, Rational(1), acc);
  return acc * Rational(factorial(k));
}

Rational barnes_number(unsigned k, const AVec& a) {
  auto& c = caches();
  const std::string key = a.sorted_key();
  {
    std::lock_guard<std::mutex> g(c.mu);
    auto it = c.numbers.find(key);
    if (it != c.numbers.end() && k < it->second.size()) return it->second[k];
  }
  const QSeries core = barnes_core_series(static_cast<int>(k), a);
  std::vector<Rational> vals(k + 1);
  for (unsigned j = 0; j <= k; ++j) {
    vals[j] = core.at(static_cast<int>(j)) * Rational(factorial(j));
    const Rational conv = barnes_number_convolution(j, a);
    if (vals[j] != conv)
      throw std::logic_error("barnes_number: series and convolution routes disagree at k=" +
                             std::to_string(j) + ", a=(" + a.str() + ")");
  }
  const Rational result = vals[k];
  std::lock_guard<std::mutex> g(c.mu);
  auto& stored = c.numbers[key];
  if (stored.size() < vals.size()) stored = std::move(vals);
  return result;
}

std::vector<Poly> barnes_poly_family(unsigned max_k, const AVec& a) {
  auto& c = caches();
  const std::string key = a.sorted_key();
  {
    std::lock_guard<std::mutex> g(c.mu);
    auto it = c.polys.find(key);
    if (it != c.polys.end() && max_k < it->second.size())
      return {it->second.begin(), it->second.begin() + max_k + 1};
  }
  const int order = static_cast<int>(max_k);
  const PSeries prod = exp_x_series(order) * lift(barnes_core_series(order, a));
  std::vector<Poly> fam(max_k + 1);
  for (unsigned j = 0; j <= max_k; ++j)
    fam[j] = Rational(factorial(j)) * prod.at(static_cast<int>(j));
  std::lock_guard<std::mutex> g(c.mu);
  auto& stored = c.polys[key];
  if (stored.size() < fam.size()) stored = fam;
  return fam;
}

BarnesPoly barnes_poly(unsigned k, const AVec& a) {
  return BarnesPoly{k, a, barnes_poly_family(k, a)[k]};
}

Rational subset_barnes_number(unsigned k, const AVec& a, const std::vector<std::size_t>& I) {
  if (I.empty()) return Rational(k == 0 ? 1 : 0);  // 0^k
  return barnes_number(k, a.subset(I));
}

Poly subset_barnes_poly(unsigned k, const AVec& a, const std::vector<std::size_t>& I) {
  if (I.empty()) return Poly::monomial(static_cast<int>(k));
  return barnes_poly_family(k, a.subset(I))[k];
}

Rational q_sequence(unsigned k, const AVec& a, const Rational& x) {
  const Rational sign = (k % 2 == 0) ? Rational(1) : Rational(-1);
  return sign * a.sum().pow(-static_cast<long>(k)) * barnes_poly_family(k, a)[k].eval(x);
}

Rational q_dual(unsigned k, const AVec& a, const Rational& x) {
  Rational acc;
  for (unsigned j = 0; j <= k; ++j) {
    const Rational sign = (j % 2 == 0) ? Rational(1) : Rational(-1);
    acc += binomial(static_cast<long>(k), static_cast<long>(j)) * sign * q_sequence(j, a, x);
  }
  return acc;
}

Poly p_poly(unsigned m, const AVec& a) {
  const Poly bm = barnes_poly_family(m, a)[m];
  return (Rational(static_cast<long>(m) + 1) * a.sum().pow(-static_cast<long>(m))) *
         (bm.reflect() + bm);
}

}  // namespace barneskit
