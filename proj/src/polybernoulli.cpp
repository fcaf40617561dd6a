#include "polyseq/polybernoulli.hpp"

#include "polyseq/stirling.hpp"

#include <map>
#include <mutex>

namespace polyseq {

namespace {

// Li_k(1-e^{-t})/(1-e^{-t}) at the given truncation order, cached per (k,
// order): the EGF checks sweep many evaluation points against one kernel.
TruncSeries pb_kernel(int k, int order) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, TruncSeries> memo;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find({k, order});
    if (it != memo.end()) return it->second;
  }
  // one spare coefficient: the division cancels one power of t
  TruncSeries z = ser_sub(TruncSeries::constant(Rat(1), order + 1),
                          ser_exp(ser_scale(Rat(-1), TruncSeries::t(order + 1))));
  TruncSeries li = k > 0 ? polylog_pos(static_cast<unsigned>(k), z)
                         : polylog_neg(static_cast<unsigned>(-k), z);
  TruncSeries kernel = ser_div(li, z);
  std::lock_guard<std::mutex> lock(mu);
  memo.insert({{k, order}, kernel});
  return kernel;
}

}  // namespace

Poly pb_poly_closed(int n, int k) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, Poly> memo;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find({n, k});
    if (it != memo.end()) return it->second;
  }
  Poly acc;
  for (int m = 0; m <= std::min(n, k); ++m) {
    Rat f2(factorial(static_cast<unsigned>(m)));
    acc += (f2 * f2 * Rat(stirling2(k + 1, m + 1))) *
           stirling2_weighted(n, m).shifted_arg(Rat(1));
  }
  std::lock_guard<std::mutex> lock(mu);
  memo[{n, k}] = acc;
  return acc;
}

Poly pb_poly_sieve(int n, int k) {
  Poly acc;
  for (int m = 0; m <= k; ++m) {
    Rat c = Rat(stirling2(k, m)) * Rat(factorial(static_cast<unsigned>(m)));
    if ((k + m) % 2 != 0) c = -c;
    Poly base(std::vector<Rat>{Rat(m + 1), Rat(1)});  // x + m + 1
    acc += c * base.pow(static_cast<unsigned>(n));
  }
  return acc;
}

Poly pb_poly_binomial(int n, int k) {
  std::vector<Rat> coeff(static_cast<size_t>(n) + 1);
  for (int j = 0; j <= n; ++j)
    coeff[static_cast<size_t>(j)] =
        Rat(binomial(static_cast<unsigned>(n), static_cast<unsigned>(j))) *
        pb_poly_closed(n - j, k).eval(Rat(0));
  return Poly(std::move(coeff));
}

Int pb_number(int n, int k) { return numerator(pb_poly_closed(n, k).eval(Rat(0))); }

Rat pb_egf(int n, int k, const Rat& x, int order) {
  if (order <= n) order = n + 2;
  TruncSeries kernel = pb_kernel(k, order);
  TruncSeries ext = ser_exp(ser_scale(x, TruncSeries::t(order)));
  return egf_coeff(ser_mul(kernel, ext), static_cast<unsigned>(n));
}

Int pb_typeC(int n, int k) { return numerator(pb_poly_closed(n, k).eval(Rat(-1))); }

Int c_sym_binomial(int n, int k, int r, int s) {
  Rat acc = 0;
  for (int j = 0; j <= k; ++j) {
    Rat term = Rat(binomial(static_cast<unsigned>(k), static_cast<unsigned>(j))) *
               pb_poly_closed(n, j).eval(Rat(r));
    // 0^0 = 1 in the defining sum
    int e = k - j;
    acc += term * (e == 0 ? Rat(1) : Rat(int_pow(Int(s), static_cast<unsigned>(e))));
  }
  return numerator(acc);
}

Int c_sym_stirling(int n, int k, int r, int s) {
  Rat acc = 0;
  for (int m = 0; m <= std::min(n, k); ++m) {
    Rat f2(factorial(static_cast<unsigned>(m)));
    acc += f2 * f2 * stirling2_weighted(n, m).eval(Rat(r + 1)) *
           stirling2_weighted(k, m).eval(Rat(s + 1));
  }
  return numerator(acc);
}

Int hypersum(int k, int r, int n) {
  if (n <= 0) return 0;
  if (r == 0) {
    Int acc = 0;
    for (int i = 1; i <= n; ++i) acc += int_pow(Int(i), static_cast<unsigned>(k));
    return acc;
  }
  Int acc = 0;
  for (int j = 1; j <= n; ++j) acc += hypersum(k, r - 1, j);
  return acc;
}

Rat ber_hypersum_lhs(int n, int k, const Rat& x, const Rat& y) {
  Rat acc = 0;
  for (int j = 0; j <= n; ++j)
    acc += stirling1_weighted(n, j).eval(y) * pb_poly_closed(j, k).eval(x);
  return acc;
}

Rat ber_hypersum_rhs(int n, int k, const Rat& x, const Rat& y) {
  Rat acc = 0;
  for (int l = 0; l <= n; ++l) {
    acc += Rat(binomial(static_cast<unsigned>(n), static_cast<unsigned>(l))) *
           pochhammer(x + y, static_cast<unsigned>(n - l)) *
           Rat(factorial(static_cast<unsigned>(l))) *
           Rat(int_pow(Int(l + 1), static_cast<unsigned>(k)));
  }
  return acc;
}

bool ber_hypersum_check(int n, int k, const Rat& x, const Rat& y) {
  return ber_hypersum_lhs(n, k, x, y) == ber_hypersum_rhs(n, k, x, y);
}

}  // namespace polyseq
