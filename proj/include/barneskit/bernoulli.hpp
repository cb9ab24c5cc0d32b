#pragma once

#include "barneskit/poly.hpp"
#include "barneskit/rational.hpp"
#include "barneskit/series.hpp"

namespace barneskit {

// B_k: k! [z^k] z/(e^z - 1), memoized.
Rational bernoulli_number(unsigned k);

// B_k(x) = sum_j C(k,j) B_j x^{k-j}; degree k, monic.
Poly bernoulli_poly(unsigned k);

// B_k^{(n)} = k! [z^k] (z/(e^z - 1))^n, n >= 1.
Rational bernoulli_order(unsigned k, unsigned n);

// B_k^{(n)}(x) = k! [z^k] e^{xz} (z/(e^z - 1))^n, degree k, monic.
Poly bernoulli_order_poly(unsigned k, unsigned n);

// z/(e^z - 1) truncated at z^order.
QSeries bernoulli_core_series(int order);

// e^{xz} as a series with Poly coefficients x^j/j!.
PSeries exp_x_series(int order);

}  // namespace barneskit
