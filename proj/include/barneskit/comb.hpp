#pragma once

#include "barneskit/rational.hpp"

#include <gmpxx.h>

namespace barneskit {

// n! (memoized; safe for concurrent callers).
mpz_class factorial(unsigned long n);

// C(n,k) with the conventions used throughout: k < 0 gives 0, and any
// integer n uses the falling-factorial definition n(n-1)...(n-k+1)/k!.
mpz_class binomial_int(long n, long k);
Rational binomial(long n, long k);

// Signed Stirling numbers of the first kind:
// sum_k s(n,k) x^k = x(x-1)...(x-n+1), s(n+1,k) = s(n,k-1) - n*s(n,k).
mpz_class stirling_first(unsigned n, unsigned k);

}  // namespace barneskit
