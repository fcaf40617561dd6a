#pragma once

#include "polyseq/poly.hpp"
#include "polyseq/series.hpp"

namespace polyseq {

// r-Eulerian polynomials E_n^r(x): run-weight generating polynomials over
// words of [n] with r indistinguishable zeros; r may be any rational (the
// explicit formula uses integer-depth generalized binomials, the recursion
// is rational throughout).

// sum_k sum_j (-1)^j C(n+r+1, j) C(r+k-j, k-j) (k+1-j)^n x^k
Poly eulerian_explicit(int n, const Rat& r);

// E_{m+1} = x(1-x) dE_m/dx + ((m+r)x + 1) E_m, from E_0 = 1.
Poly eulerian_rec(int n, const Rat& r);

// Classical Eulerian number A(n, k), permutations of [n] with k ascending
// runs; 0 outside 1 <= k <= n.
Int eulerian_number(int n, int k);

// Compares EGF coefficients of e^{t(1-x0)} ((1-x0)/(1-x0 e^{t(1-x0)}))^{r+1}
// against eulerian_rec evaluated at x0, for n <= max_n. Supports integer
// r >= 0 and r = 1/2, where the power 3/2 is computed as a cube followed by
// a series square root (the base has constant term 1). Requires x0 != 1.
bool eulerian_egf_check(const Rat& r, const Rat& x0, int max_n, int order = kDefaultOrder);

}  // namespace polyseq
