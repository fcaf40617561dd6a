#pragma once

#include "polyseq/rational.hpp"
#include "polyseq/series.hpp"

namespace polyseq {

// Poly-Euler numbers with negative upper index: first kind is the
// combinatorial normalization Et_n^{(-k)} = n E_{n-1}^{(-k)}, second kind is
// Eh_n^{(-k)}. Every route below returns the same nonnegative integer.
enum class EulerKind { first, second };

// Inclusion-exclusion formulas (odd-m sum for the first kind, even-m for the
// second); the leading (-1)^k is kept literally and positivity is asserted
// afterwards.
Int pe_incexc(EulerKind kind, int n, int k);

// Triple-sum closed form for the first kind; 0 at n = 0 (empty odd choice).
Int pe_closed_first(int n, int k);

// sum_m (m!)^2 (sum_l C(n,l) Et_l^{(0)} [n-l m] 4^{n-l}) [k+1 m+1]
Int pe_ohno_sasaki(int n, int k);

// Convolution against type-C poly-Bernoulli numbers,
// sum_l C(n,l) E0(l) C_{n-l}^{(-k)} 4^{n-l} with E0(l) = (3^l -+ 1)/2.
Int pe_via_typeC(EulerKind kind, int n, int k);

// (3^n - 1)/2 for odd, (3^n + 1)/2 for even; computed both by the binomial
// sum and the closed form, error if the two routes ever disagree.
Int pe_e0(bool odd, int n);

// EGF coefficients: Li_{-k}(1-e^{-4t}) / (4 cosh t) resp. (4 sinh t).
Int pe_egf(EulerKind kind, int n, int k, int order = kDefaultOrder);

// Identity checks used by the verification suites.
bool pe_difference_check(int n, int k);    // Eh - Et = sum C(n,l) C_{n-l} 4^{n-l}
bool pe_convolution_check(int n, int k);   // 4^n B_n^{(-k)} = sum C(n,m)(Et_m + Eh_m)
bool pe_k1_check(int n);                   // k = 1 special case, both kinds

}  // namespace polyseq
