#pragma once

#include "polyseq/poly.hpp"

#include <vector>

namespace polyseq {

// Truncation order used by the generating-function checks unless a caller
// states its own; identities verified through n <= 12 need order <= 14.
inline constexpr int kDefaultOrder = 16;

// Truncated formal power series over Rat: exactly `order` retained
// coefficients (indices 0..order-1). Binary operations truncate to the
// smaller operand order; coefficients past the order are never consulted,
// and equality is defined up to the common order.
class TruncSeries {
 public:
  explicit TruncSeries(int order);
  TruncSeries(int order, std::vector<Rat> coeffs);

  static TruncSeries constant(const Rat& c, int order);
  static TruncSeries t(int order);  // the formal variable
  static TruncSeries monomial(unsigned i, const Rat& c, int order);

  int order() const { return static_cast<int>(c_.size()); }
  const Rat& coeff(int i) const { return c_[static_cast<size_t>(i)]; }
  const std::vector<Rat>& coeffs() const { return c_; }

  // Index of the first nonzero coefficient; order() if zero up to order.
  int valuation() const;

  friend bool operator==(const TruncSeries& a, const TruncSeries& b);

 private:
  std::vector<Rat> c_;
};

TruncSeries ser_add(const TruncSeries& f, const TruncSeries& g);
TruncSeries ser_sub(const TruncSeries& f, const TruncSeries& g);
TruncSeries ser_scale(const Rat& s, const TruncSeries& f);
TruncSeries ser_mul(const TruncSeries& f, const TruncSeries& g);

// exp(f); requires f(0) = 0.
TruncSeries ser_exp(const TruncSeries& f);

// Square root with g(0) = c > 0, where c^2 is the constant term of f;
// requires that constant term to be the square of a rational.
TruncSeries ser_sqrt(const TruncSeries& f);

// Reciprocal; requires nonzero constant term.
TruncSeries ser_inv(const TruncSeries& g);

// Quotient after cancelling t^{valuation(g)} from both operands; the result
// order shrinks by that valuation.
TruncSeries ser_div(const TruncSeries& f, const TruncSeries& g);

TruncSeries ser_derivative(const TruncSeries& f);   // order shrinks by one
TruncSeries ser_integrate(const TruncSeries& f);    // order grows by one
TruncSeries ser_compose(const TruncSeries& f, const TruncSeries& g);  // g(0)=0
TruncSeries ser_pow(const TruncSeries& f, unsigned e);

// Li_{-k}(f) = sum_{i>=1} i^k f^i, truncated; requires f(0) = 0.
TruncSeries polylog_neg(unsigned k, const TruncSeries& f);

// Li_k(f) = sum_{i>=1} f^i / i^k for k >= 1; requires f(0) = 0.
TruncSeries polylog_pos(unsigned k, const TruncSeries& f);

// n! * [t^n] f; errors if n is not below the order.
Rat egf_coeff(const TruncSeries& f, unsigned n);

TruncSeries poly_to_series(const Poly& p, int order);
// p(g) for a series argument.
TruncSeries poly_at_series(const Poly& p, const TruncSeries& g);

}  // namespace polyseq
