#pragma once

#include "polyseq/poly.hpp"

namespace polyseq {

// Classical Stirling numbers of the second kind (0 for m > n or m < 0).
Int stirling2(int n, int m);

// Weighted Stirling polynomial of the second kind [n m]_x:
//   [n+1 m]_x = (x+m)[n m]_x + [n m-1]_x,  [n 0]_x = x^n,  [0 0]_x = 1.
// At a nonnegative integer x = r it specializes to the r-Stirling number.
Poly stirling2_weighted(int n, int m);

// r-Stirling number of the second kind, via the weighted polynomial.
Int rstirling2(int n, int m, int r);

// Weighted Stirling polynomial of the first kind:
//   stf{n+1}{m}_x = stf{n}{m-1}_x + (x+n) stf{n}{m}_x,
//   stf{0}{0}_x = 1, stf{n}{0}_x = x(x+1)...(x+n-1), 0 for m > n.
Poly stirling1_weighted(int n, int m);

// Unsigned Stirling numbers of the first kind c(n, m), independent route
// for the stf{n}{m} at x = 1 cross-checks.
Int stirling1_unsigned(int n, int m);

}  // namespace polyseq
