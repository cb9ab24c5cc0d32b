#pragma once

#include "barneskit/barnes.hpp"
#include "barneskit/rational.hpp"

namespace barneskit {

struct ZetaQuery {
  double s = 0.0;
  double x = 1.0;
  AVec a;
  double target_abs_err = 1e-10;
};

// Hurwitz zeta for real s != 1, x > 0, by Euler-Maclaurin summation with an
// adaptive shift and correction depth chosen from the remainder bound.
double hurwitz_zeta(double s, double x, double target_abs_err = 1e-12);

// Lattice sum sum_{m in Z_{>=0}^n} (x + m.a)^{-s}, rewritten over the
// partition counts as sum_t p_A(t) (x+t)^{-s}; requires s > n. The tail of
// each residue class mod lcm(a) is completed exactly through its partition
// quasipolynomial, so any target tolerance is reachable. Rational entries
// are cleared to integers by scaling.
double barnes_zeta_direct(const ZetaQuery& q);

// Decomposition into Bernoulli-Barnes-weighted Hurwitz zetas plus
// Fourier-Dedekind-weighted Hurwitz zetas; requires pairwise coprime
// positive integer entries and s outside {1,...,n}. All weights are exact
// rationals, converted to double only at the final accumulation.
double barnes_zeta_decomposed(const ZetaQuery& q);

// Exact value at s = -k: (-1)^n k!/(k+n)! B_{k+n}(x; a).
Rational barnes_zeta_special(unsigned k, const Rational& x, const AVec& a);

// Hurwitz zeta of order n: direct lattice evaluation for s > n, the
// Bernoulli-weighted combination of zeta(s-k; x) elsewhere.
double hurwitz_order_n(double s, double x, unsigned n, double target_abs_err = 1e-10);
double hurwitz_order_n_direct(double s, double x, unsigned n, double target_abs_err = 1e-10);
double hurwitz_order_n_weighted(double s, double x, unsigned n, double target_abs_err = 1e-10);

// Plain truncated sum over partition counts with an integral tail bound;
// only usable when s is far enough above n for the bound to reach the
// target. Kept as an independent test oracle.
double barnes_zeta_truncated(const ZetaQuery& q);

}  // namespace barneskit
