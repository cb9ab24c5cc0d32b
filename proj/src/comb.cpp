#include "barneskit/comb.hpp"

#include <mutex>
#include <vector>

namespace barneskit {

namespace {

std::mutex fact_mu;
std::vector<mpz_class>& fact_table() {
  static std::vector<mpz_class> t = {mpz_class(1)};
  return t;
}

std::mutex stirling_mu;
// Row n holds s(n,0..n).
std::vector<std::vector<mpz_class>>& stirling_rows() {
  static std::vector<std::vector<mpz_class>> rows = {{mpz_class(1)}};
  return rows;
}

}  // namespace

mpz_class factorial(unsigned long n) {
  std::lock_guard<std::mutex> g(fact_mu);
  auto& t = fact_table();
  while (t.size() <= n) t.push_back(t.back() * static_cast<unsigned long>(t.size()));
  return t[n];
}

mpz_class binomial_int(long n, long k) {
  if (k < 0) return 0;
  mpz_class num = 1;
  for (long i = 0; i < k; ++i) num *= mpz_class(n - i);
  mpz_class r;
  mpz_divexact(r.get_mpz_t(), num.get_mpz_t(), factorial(static_cast<unsigned long>(k)).get_mpz_t());
  return r;
}

Rational binomial(long n, long k) { return Rational(binomial_int(n, k)); }

mpz_class stirling_first(unsigned n, unsigned k) {
  if (k > n) return 0;
  std::lock_guard<std::mutex> g(stirling_mu);
  auto& rows = stirling_rows();
  while (rows.size() <= n) {
    const std::size_t m = rows.size();  // building row m from row m-1
    const auto& prev = rows[m - 1];
    std::vector<mpz_class> row(m + 1);
    row[0] = 0;
    for (std::size_t j = 1; j <= m; ++j) {
      mpz_class v = (j <= m - 1) ? prev[j] : mpz_class(0);
      row[j] = prev[j - 1] - mpz_class(static_cast<unsigned long>(m - 1)) * v;
    }
    rows.push_back(std::move(row));
  }
  return rows[n][k];
}

}  // namespace barneskit
