#pragma once

#include "polyseq/poly.hpp"
#include "polyseq/series.hpp"

#include <string>

namespace polyseq {

// Lehmer's polynomial pair, p_{-1} = 0, q_{-1} = 1, and for k >= -1
//   p_{k+1} = 2(kx+1) p_k + 2x(1-x) p_k' + q_k
//   q_{k+1} = (2(k+1)x+1) q_k + 2x(1-x) q_k'.
struct PQPair {
  int k;
  Poly p;
  Poly q;
};

PQPair pq(int k);  // k >= -1, cached

// Exact element u + v * pi/sqrt(3). Addition and rational scaling stay in
// the module Q + Q*pi/sqrt(3); decimal rendering goes through the fixed
// 60-digit constant below.
struct PiSqrt3Value {
  Rat u;
  Rat v;
  Rat approx() const;  // u + v * kPiOverSqrt3
  std::string str() const;

  friend PiSqrt3Value operator+(const PiSqrt3Value& a, const PiSqrt3Value& b) {
    return {a.u + b.u, a.v + b.v};
  }
  friend PiSqrt3Value operator*(const Rat& s, const PiSqrt3Value& a) {
    return {s * a.u, s * a.v};
  }
  friend bool operator==(const PiSqrt3Value& a, const PiSqrt3Value& b) {
    return a.u == b.u && a.v == b.v;
  }
};

// pi/sqrt(3) to 60 significant digits; display and residual checks only.
extern const Rat kPiOverSqrt3;

Rat a_seq(int n);  // (2/3)^n p_n(1/4); observed integral for every computed n
Int b_seq(int n);  // sum_{k<=n} B_{n-k}^{(-k)}(0)

// 3 a_{n+1} = 2 a_n + sum_{k<=n} C(n+1,k) a_k + 3, and the same shape for b.
bool a_recursion_check(int n);
bool b_recursion_check(int n);

// (4 - e^t) A' - (2 + e^t) A = 3 e^t on the truncation built from a_0..a_max.
bool ab_ode_check(int max_n);

// Both recursions for 0..n plus the ODE check at that truncation.
bool ab_recursion_check(int n);

// a_m = b_m exactly for all m <= max_n.
bool stephan_check(int max_n);

// zeta_CB(-k) = (1/3)(2/3)^k p_k(1/4) + (1/3)(2/3)^{k+1} q_k(1/4) pi/sqrt(3).
PiSqrt3Value zeta_cb_neg(int k);

// Exact partial sum sum_{n=1..terms} n^k / C(2n,n).
Rat zeta_cb_partial(int k, int terms);

// q_n(x) = (2x)^n E_n^{1/2}(1/x) as exact polynomials.
bool q_eulerian_check(int n);

// p_n(x) = 2^n E_n^0(x) + sum_{k=1..n} C(n,k) q_{n-k}(x) q_{k-2}(x).
bool p_explicit_check(int n);

// sum_{n>=1} (2n)^k (2x)^{2n} / C(2n,n)  ==
//   x (1-x^2)^{-k-3/2} ( x sqrt(1-x^2) p_k(x^2) + arcsin(x) q_k(x^2) )
// as truncated series in x, coefficients 0..order-1.
bool lehmer_series_check(int k, int order);

// F_j(x,y) = (j!)^2 / ((x)_j (y)_j), F_{-1} = 0; raises "pole of F_j ..."
// when a Pochhammer factor vanishes.
Rat f_term(int j, const Rat& x, const Rat& y);

// Four-term contiguous relation for F_j; right side is (x-1)(y-1) at j = 0
// and 0 for j > 0.
bool trans_check(int j, const Rat& x, const Rat& y);

// Partial-sum comparison of the two sides of the F_j identity driving the
// b-sequence recursion. Both sides are exact rationals; the verdict is
// |LHS_J - RHS_J| <= tol + (proven truncation bound), since the discarded
// tails are the only discrepancy between the finite sums.
bool key_equality_check(const Rat& x, int J, const Rat& tol);
Rat key_equality_gap(const Rat& x, int J);
Rat key_equality_tail_bound(const Rat& x, int J);

// Coefficients 0..N of sum_j (j!)^2 x^{2j} / prod_{i<=j+1} (1-ix)^2 match
// b_seq; terms with 2j > N vanish, so J = ceil(N/2) suffices.
bool bn_ogf_check(int N, int J);

}  // namespace polyseq
