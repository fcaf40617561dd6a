#include "polyseq/polyeuler.hpp"

#include "polyseq/polybernoulli.hpp"
#include "polyseq/stirling.hpp"

#include <stdexcept>

namespace polyseq {

namespace {

Int require_nonneg(Int v, const char* what) {
  if (v < 0) throw std::logic_error(std::string("negative poly-Euler value from ") + what);
  return v;
}

}  // namespace

Int pe_incexc(EulerKind kind, int n, int k) {
  Int total = 0;
  const int start = kind == EulerKind::first ? 1 : 0;
  for (int m = start; m <= n; m += 2) {
    Int inner = 0;
    for (int l = 0; l <= k; ++l) {
      Int term = factorial(static_cast<unsigned>(l)) * stirling2(k, l);
      if (kind == EulerKind::first) {
        term *= int_pow(Int(2), static_cast<unsigned>(n - m)) *
                int_pow(Int(2 * l + 1), static_cast<unsigned>(n - m));
      } else {
        term *= int_pow(Int(4 * l + 2), static_cast<unsigned>(n - m));
      }
      inner += (l % 2 == 0) ? term : -term;
    }
    total += binomial(static_cast<unsigned>(n), static_cast<unsigned>(m)) * inner;
  }
  if (k % 2 != 0) total = -total;
  return require_nonneg(total, "inclusion-exclusion");
}

Int pe_closed_first(int n, int k) {
  if (n == 0) return 0;
  Int total = 0;
  for (int j = 0; 2 * j + 1 <= n; ++j) {
    Int inner = 0;
    for (int m = 0; m <= k; ++m) {
      Int s_sum = 0;
      for (int s = 0; s <= m; ++s) {
        s_sum += int_pow(Int(2), static_cast<unsigned>(m - s)) *
                 binomial(static_cast<unsigned>(m), static_cast<unsigned>(s)) *
                 factorial(static_cast<unsigned>(m + s)) * stirling2(n - 2 * j, m + s + 1);
      }
      inner += factorial(static_cast<unsigned>(m)) * stirling2(k + 1, m + 1) * s_sum;
    }
    total += binomial(static_cast<unsigned>(n), static_cast<unsigned>(2 * j + 1)) *
             int_pow(Int(2), static_cast<unsigned>(n - 2 * j - 1)) * inner;
  }
  return require_nonneg(total, "closed form");
}

Int pe_ohno_sasaki(int n, int k) {
  if (n == 0) return 0;
  Int total = 0;
  for (int m = 0; m <= std::min(n - 1, k); ++m) {
    Int inner = 0;
    for (int l = 1; l <= n - m; ++l) {
      inner += binomial(static_cast<unsigned>(n), static_cast<unsigned>(l)) * pe_e0(true, l) *
               stirling2(n - l, m) * int_pow(Int(4), static_cast<unsigned>(n - l));
    }
    Int f = factorial(static_cast<unsigned>(m));
    total += f * f * inner * stirling2(k + 1, m + 1);
  }
  return require_nonneg(total, "Ohno-Sasaki form");
}

Int pe_via_typeC(EulerKind kind, int n, int k) {
  Int total = 0;
  for (int l = 0; l <= n; ++l) {
    total += binomial(static_cast<unsigned>(n), static_cast<unsigned>(l)) *
             pe_e0(kind == EulerKind::first, l) * pb_typeC(n - l, k) *
             int_pow(Int(4), static_cast<unsigned>(n - l));
  }
  return require_nonneg(total, "type-C convolution");
}

Int pe_e0(bool odd, int n) {
  Int by_sum = 0;
  for (int j = 0; 2 * j + (odd ? 1 : 0) <= n; ++j) {
    int m = 2 * j + (odd ? 1 : 0);
    by_sum += binomial(static_cast<unsigned>(n), static_cast<unsigned>(m)) *
              int_pow(Int(2), static_cast<unsigned>(n - m));
  }
  Int closed = (int_pow(Int(3), static_cast<unsigned>(n)) + (odd ? -1 : 1)) / 2;
  if (by_sum != closed) throw std::logic_error("pe_e0: binomial sum and closed form disagree");
  return closed;
}

Int pe_egf(EulerKind kind, int n, int k, int order) {
  if (order <= n + 1) order = n + 3;
  TruncSeries t = TruncSeries::t(order);
  TruncSeries z = ser_sub(TruncSeries::constant(Rat(1), order),
                          ser_exp(ser_scale(Rat(-4), t)));
  TruncSeries num = polylog_neg(static_cast<unsigned>(k), z);
  TruncSeries ep = ser_exp(t);
  TruncSeries em = ser_exp(ser_scale(Rat(-1), t));
  TruncSeries den = kind == EulerKind::first
                        ? ser_scale(Rat(2), ser_add(ep, em))    // 4 cosh t
                        : ser_scale(Rat(2), ser_sub(ep, em));   // 4 sinh t
  Rat v = egf_coeff(ser_div(num, den), static_cast<unsigned>(n));
  return require_nonneg(numerator(v), "EGF");
}

bool pe_difference_check(int n, int k) {
  Int lhs = pe_incexc(EulerKind::second, n, k) - pe_incexc(EulerKind::first, n, k);
  Int rhs = 0;
  for (int l = 0; l <= n; ++l) {
    rhs += binomial(static_cast<unsigned>(n), static_cast<unsigned>(l)) * pb_typeC(n - l, k) *
           int_pow(Int(4), static_cast<unsigned>(n - l));
  }
  return lhs == rhs;
}

bool pe_convolution_check(int n, int k) {
  Int lhs = int_pow(Int(4), static_cast<unsigned>(n)) * pb_number(n, k);
  Int rhs = 0;
  for (int m = 0; m <= n; ++m) {
    rhs += binomial(static_cast<unsigned>(n), static_cast<unsigned>(m)) *
           (pe_incexc(EulerKind::first, m, k) + pe_incexc(EulerKind::second, m, k));
  }
  return lhs == rhs;
}

bool pe_k1_check(int n) {
  Int first = 0, second = 0;
  for (int l = 0; l <= n; ++l) {
    Int c = binomial(static_cast<unsigned>(n), static_cast<unsigned>(l)) *
            int_pow(Int(4), static_cast<unsigned>(n - l));
    first += c * pe_e0(true, l);
    second += c * pe_e0(false, l);
  }
  return first == pe_incexc(EulerKind::first, n, 1) &&
         second == pe_incexc(EulerKind::second, n, 1);
}

}  // namespace polyseq
