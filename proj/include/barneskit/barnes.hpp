#pragma once

#include "barneskit/poly.hpp"
#include "barneskit/rational.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace barneskit {

// Parameter vector a = (a_1,...,a_n); nonempty, every entry > 0.
class AVec {
 public:
  explicit AVec(std::vector<Rational> entries);
  // "1,2,3/2"
  static AVec parse(std::string_view csv);
  static AVec ones(std::size_t n);

  std::size_t size() const { return entries_.size(); }
  const Rational& operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<Rational>& entries() const { return entries_; }

  Rational sum() const;
  Rational product() const;
  bool all_integers() const;
  // Entries as integers; throws when any entry is non-integral.
  std::vector<long> as_integers() const;
  // Requires integer entries.
  bool pairwise_coprime() const;
  AVec subset(const std::vector<std::size_t>& idx) const;
  AVec without(std::size_t idx) const;
  std::string str() const;
  // Order-insensitive key (Bernoulli-Barnes data is symmetric in the a_i).
  std::string sorted_key() const;

 private:
  std::vector<Rational> entries_;
};

struct BarnesPoly {
  unsigned k;
  AVec a;
  Poly poly;  // B_k(x; a), degree k, leading coefficient 1/prod(a_i)
};

// B_k(a), computed by series inversion and by the multinomial convolution
// over Bernoulli numbers; the two routes are compared on every fresh value.
Rational barnes_number(unsigned k, const AVec& a);
Rational barnes_number_series(unsigned k, const AVec& a);
Rational barnes_number_convolution(unsigned k, const AVec& a);

BarnesPoly barnes_poly(unsigned k, const AVec& a);
// B_0(x;a)..B_max_k(x;a) from a single series expansion (cached).
std::vector<Poly> barnes_poly_family(unsigned max_k, const AVec& a);

// B_k(a_I); the empty subset uses the x^k convention at x = 0.
Rational subset_barnes_number(unsigned k, const AVec& a, const std::vector<std::size_t>& I);
// B_k(x; a_I); the empty subset gives the monomial x^k.
Poly subset_barnes_poly(unsigned k, const AVec& a, const std::vector<std::size_t>& I);

// Q_k(x; a) = (-1)^k A^{-k} B_k(x; a) evaluated at x.
Rational q_sequence(unsigned k, const AVec& a, const Rational& x);
// Binomial dual: sum_{j<=k} C(k,j) (-1)^j Q_j(x; a).
Rational q_dual(unsigned k, const AVec& a, const Rational& x);

// P_m(x) = (m+1) A^{-m} (B_m(-x;a) + B_m(x;a)).
Poly p_poly(unsigned m, const AVec& a);

}  // namespace barneskit
