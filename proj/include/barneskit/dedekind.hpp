#pragma once

#include "barneskit/rational.hpp"

#include <gmpxx.h>

#include <vector>

namespace barneskit {

// Parts multiset for the restricted partition function p_A(t).
class PartitionSpec {
 public:
  explicit PartitionSpec(std::vector<long> parts);
  const std::vector<long>& parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  bool pairwise_coprime() const;

 private:
  std::vector<long> parts_;
};

// Number of (k_1,...,k_n) in Z_{>=0}^n with sum k_i a_i = t.
mpz_class partition_count_dp(const PartitionSpec& spec, long t);
std::vector<mpz_class> partition_counts_upto(const PartitionSpec& spec, long tmax);

// p_{a,b}(t) = t/(ab) + 1 - {b^{-1}t/a} - {a^{-1}t/b} for coprime a, b.
mpz_class popoviciu(long a, long b, long t);

// sigma_r(others; modulus): (1/modulus) * sum over the nontrivial
// modulus-th roots of unity lambda of lambda^r / prod_k (1 - lambda^{o_k}).
// r is reduced mod modulus; others may be empty; every o_k must be coprime
// to the modulus.
struct FdsKey {
  long r = 0;
  std::vector<long> others;
  long modulus = 1;
};

// Exact value via arithmetic in Q[x]/(1 + x + ... + x^{modulus-1}).
Rational fourier_dedekind_exact(const FdsKey& key);
// Direct complex summation over the roots of unity (test oracle).
double fourier_dedekind_float(const FdsKey& key);

// Closed form of p_A(t) for pairwise coprime parts; cross-checks itself
// against the DP count.
mpz_class partition_count_closed(const PartitionSpec& spec, long t);
// Same value, without the DP cross-check (for the identity suite).
Rational partition_count_closed_value(const PartitionSpec& spec, long t);

// sigma_t(1,...,1; a) with n_ones ones, in closed form.
Rational sigma_ones_closed(long t, unsigned n_ones, long a);

// S_m(a,b) = sum_{r=0}^{a-1} {a^{-1} r / b} B_m(r/b), a^{-1} taken mod b.
Rational apostol_sum(unsigned m, long a, long b);

// Inverse of u mod m, canonical representative in [0, m).
long mod_inverse(long u, long m);

}  // namespace barneskit
