#pragma once

#include "polyseq/poly.hpp"
#include "polyseq/series.hpp"

namespace polyseq {

// Poly-Bernoulli polynomials B_n^{(-k)}(x) for n, k >= 0 by three exact
// routes that must agree coefficientwise, plus the EGF route for arbitrary
// polylog index.

// sum_m (m!)^2 [k+1 m+1] [n m]_{x+1}
Poly pb_poly_closed(int n, int k);

// sum_m [k m] (-1)^{k+m} m! (m+x+1)^n
Poly pb_poly_sieve(int n, int k);

// sum_j C(n,j) B_{n-j}^{(-k)}(0) x^j, constants taken from the closed form
Poly pb_poly_binomial(int n, int k);

// B_n^{(-k)}(0) as an integer.
Int pb_number(int n, int k);

// n!-th EGF coefficient of Li_k(1-e^{-t})/(1-e^{-t}) e^{xt}; k may be any
// integer (negative/zero handled by the rational polylog, positive by the
// 1/i^k polylog). For k <= 0 this equals pb_poly_closed(n, -k) at x.
Rat pb_egf(int n, int k, const Rat& x, int order = kDefaultOrder);

// Type-C value C_n^{(-k)} = B_n^{(-k)}(-1).
Int pb_typeC(int n, int k);

// Symmetrized two-index function, two routes that must agree:
//   binomial:  sum_j C(k,j) B_n^{(-j)}(r) s^{k-j}
//   stirling:  sum_m (m!)^2 [n m]_{r+1} [k m]_{s+1}
Int c_sym_binomial(int n, int k, int r, int s);
Int c_sym_stirling(int n, int k, int r, int s);

// Iterated power sums S_k^{(r)}(n); S_k^{(0)}(n) = 1^k + ... + n^k.
Int hypersum(int k, int r, int n);

// Both sides of the first-kind-Stirling / poly-Bernoulli identity
//   sum_j stf{n}{j}_y B_j^{(-k)}(x) = sum_l C(n,l) (x+y)_{n-l} l! (l+1)^k.
Rat ber_hypersum_lhs(int n, int k, const Rat& x, const Rat& y);
Rat ber_hypersum_rhs(int n, int k, const Rat& x, const Rat& y);
bool ber_hypersum_check(int n, int k, const Rat& x, const Rat& y);

}  // namespace polyseq
