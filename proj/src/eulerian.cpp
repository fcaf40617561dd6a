#include "polyseq/eulerian.hpp"

#include <stdexcept>

namespace polyseq {

Poly eulerian_explicit(int n, const Rat& r) {
  Poly acc;
  for (int k = 0; k <= n; ++k) {
    Rat coeff = 0;
    for (int j = 0; j <= k; ++j) {
      Rat term = binom(Rat(n) + r + 1, static_cast<unsigned>(j)) *
                 binom(r + (k - j), static_cast<unsigned>(k - j)) *
                 rat_pow(Rat(k + 1 - j), n);
      coeff += (j % 2 == 0) ? term : -term;
    }
    acc += Poly::monomial(static_cast<unsigned>(k), coeff);
  }
  return acc;
}

Poly eulerian_rec(int n, const Rat& r) {
  Poly e(Rat(1));
  const Poly x = Poly::x();
  for (int m = 0; m < n; ++m) {
    Poly d = e.derivative();
    e = x * d - (x * x) * d + ((Rat(m) + r) * x + Poly(Rat(1))) * e;
  }
  return e;
}

Int eulerian_number(int n, int k) {
  if (k < 1 || k > n) return 0;
  Rat c = eulerian_rec(n, Rat(0)).coeff(static_cast<unsigned>(k - 1));
  return numerator(c);
}

bool eulerian_egf_check(const Rat& r, const Rat& x0, int max_n, int order) {
  if (x0 == 1) throw std::domain_error("eulerian EGF check requires x0 != 1");
  if (order <= max_n) order = max_n + 2;
  const Rat w = Rat(1) - x0;
  TruncSeries u = ser_exp(ser_scale(w, TruncSeries::t(order)));  // e^{t(1-x0)}
  TruncSeries den = ser_sub(TruncSeries::constant(Rat(1), order), ser_scale(x0, u));
  TruncSeries base = ser_div(TruncSeries::constant(w, order), den);  // constant term 1

  TruncSeries powed(order);
  if (denominator(r) == 1 && r >= 0) {
    powed = ser_pow(base, static_cast<unsigned>(numerator(r)) + 1);
  } else if (r == Rat(1, 2)) {
    powed = ser_sqrt(ser_pow(base, 3));
  } else {
    throw std::domain_error("eulerian EGF check supports integer r >= 0 or r = 1/2");
  }
  TruncSeries egf = ser_mul(u, powed);
  for (int n = 0; n <= max_n; ++n) {
    if (egf_coeff(egf, static_cast<unsigned>(n)) != eulerian_rec(n, r).eval(x0)) return false;
  }
  return true;
}

}  // namespace polyseq
