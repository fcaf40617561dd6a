#include "polyseq/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace polyseq {

namespace {

bool rat_sqrt(const Rat& v, Rat& out) {
  if (v < 0) return false;
  Int ns = boost::multiprecision::sqrt(numerator(v));
  Int ds = boost::multiprecision::sqrt(denominator(v));
  if (ns * ns != numerator(v) || ds * ds != denominator(v)) return false;
  out = Rat(ns, ds);
  return true;
}

}  // namespace

TruncSeries::TruncSeries(int order) : c_(static_cast<size_t>(std::max(order, 0))) {}

TruncSeries::TruncSeries(int order, std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
  c_.resize(static_cast<size_t>(std::max(order, 0)), Rat(0));
}

TruncSeries TruncSeries::constant(const Rat& c, int order) {
  TruncSeries r(order);
  if (order > 0) r.c_[0] = c;
  return r;
}

TruncSeries TruncSeries::t(int order) { return monomial(1, Rat(1), order); }

TruncSeries TruncSeries::monomial(unsigned i, const Rat& c, int order) {
  TruncSeries r(order);
  if (static_cast<int>(i) < order) r.c_[i] = c;
  return r;
}

int TruncSeries::valuation() const {
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return static_cast<int>(i);
  return order();
}

bool operator==(const TruncSeries& a, const TruncSeries& b) {
  int n = std::min(a.order(), b.order());
  for (int i = 0; i < n; ++i)
    if (a.coeff(i) != b.coeff(i)) return false;
  return true;
}

TruncSeries ser_add(const TruncSeries& f, const TruncSeries& g) {
  int n = std::min(f.order(), g.order());
  TruncSeries r(n);
  std::vector<Rat> c(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) c[i] = f.coeff(i) + g.coeff(i);
  return TruncSeries(n, std::move(c));
}

TruncSeries ser_sub(const TruncSeries& f, const TruncSeries& g) {
  int n = std::min(f.order(), g.order());
  std::vector<Rat> c(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) c[i] = f.coeff(i) - g.coeff(i);
  return TruncSeries(n, std::move(c));
}

TruncSeries ser_scale(const Rat& s, const TruncSeries& f) {
  std::vector<Rat> c = f.coeffs();
  for (auto& v : c) v *= s;
  return TruncSeries(f.order(), std::move(c));
}

TruncSeries ser_mul(const TruncSeries& f, const TruncSeries& g) {
  int n = std::min(f.order(), g.order());
  std::vector<Rat> c(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    if (f.coeff(i) == 0) continue;
    for (int j = 0; i + j < n; ++j) {
      if (g.coeff(j) == 0) continue;
      c[i + j] += f.coeff(i) * g.coeff(j);
    }
  }
  return TruncSeries(n, std::move(c));
}

TruncSeries ser_exp(const TruncSeries& f) {
  int n = f.order();
  if (n > 0 && f.coeff(0) != 0)
    throw std::domain_error("exp requires zero constant term");
  TruncSeries acc = TruncSeries::constant(Rat(1), n);
  TruncSeries p = TruncSeries::constant(Rat(1), n);
  Int fact = 1;
  for (int i = 1; i < n; ++i) {
    p = ser_mul(p, f);  // valuation >= i
    fact *= i;
    acc = ser_add(acc, ser_scale(Rat(Int(1), fact), p));
  }
  return acc;
}

TruncSeries ser_sqrt(const TruncSeries& f) {
  int n = f.order();
  if (n == 0) return f;
  Rat c0;
  if (f.coeff(0) == 0 || !rat_sqrt(f.coeff(0), c0) || c0 == 0)
    throw std::domain_error("non-square constant term");
  std::vector<Rat> g(static_cast<size_t>(n));
  g[0] = c0;
  for (int i = 1; i < n; ++i) {
    Rat s = f.coeff(i);
    for (int j = 1; j < i; ++j) s -= g[j] * g[i - j];
    g[i] = s / (2 * c0);
  }
  return TruncSeries(n, std::move(g));
}

TruncSeries ser_inv(const TruncSeries& g) {
  int n = g.order();
  if (n == 0 || g.coeff(0) == 0)
    throw std::domain_error("inverse requires nonzero constant term");
  std::vector<Rat> r(static_cast<size_t>(n));
  r[0] = Rat(1) / g.coeff(0);
  for (int i = 1; i < n; ++i) {
    Rat s = 0;
    for (int j = 1; j <= i; ++j) s += g.coeff(j) * r[i - j];
    r[i] = -s / g.coeff(0);
  }
  return TruncSeries(n, std::move(r));
}

TruncSeries ser_div(const TruncSeries& f, const TruncSeries& g) {
  int n = std::min(f.order(), g.order());
  TruncSeries fn(n, f.coeffs());
  TruncSeries gn(n, g.coeffs());
  int v = gn.valuation();
  if (v == n) throw std::domain_error("division by zero series");
  if (fn.valuation() < v) throw std::domain_error("non-formal quotient");
  int m = n - v;
  std::vector<Rat> fs(static_cast<size_t>(m)), gs(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) {
    fs[i] = fn.coeff(i + v);
    gs[i] = gn.coeff(i + v);
  }
  return ser_mul(TruncSeries(m, std::move(fs)), ser_inv(TruncSeries(m, std::move(gs))));
}

TruncSeries ser_derivative(const TruncSeries& f) {
  int n = f.order() - 1;
  if (n < 0) n = 0;
  std::vector<Rat> c(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) c[i] = Rat(i + 1) * f.coeff(i + 1);
  return TruncSeries(n, std::move(c));
}

TruncSeries ser_integrate(const TruncSeries& f) {
  int n = f.order() + 1;
  std::vector<Rat> c(static_cast<size_t>(n));
  for (int i = 1; i < n; ++i) c[i] = f.coeff(i - 1) / i;
  return TruncSeries(n, std::move(c));
}

TruncSeries ser_compose(const TruncSeries& f, const TruncSeries& g) {
  if (g.order() > 0 && g.coeff(0) != 0)
    throw std::domain_error("composition requires zero constant term");
  int n = std::min(f.order(), g.order());
  TruncSeries gn(n, g.coeffs());
  TruncSeries r(n);
  for (int i = f.order() - 1; i >= 0; --i)
    r = ser_add(ser_mul(r, gn), TruncSeries::constant(f.coeff(i), n));
  return r;
}

TruncSeries ser_pow(const TruncSeries& f, unsigned e) {
  TruncSeries r = TruncSeries::constant(Rat(1), f.order());
  for (unsigned i = 0; i < e; ++i) r = ser_mul(r, f);
  return r;
}

TruncSeries polylog_neg(unsigned k, const TruncSeries& f) {
  int n = f.order();
  if (n > 0 && f.coeff(0) != 0)
    throw std::domain_error("polylog requires zero constant term");
  TruncSeries acc(n);
  TruncSeries p = TruncSeries::constant(Rat(1), n);
  for (int i = 1; i < n; ++i) {
    p = ser_mul(p, f);
    acc = ser_add(acc, ser_scale(Rat(int_pow(Int(i), k)), p));
  }
  return acc;
}

TruncSeries polylog_pos(unsigned k, const TruncSeries& f) {
  int n = f.order();
  if (n > 0 && f.coeff(0) != 0)
    throw std::domain_error("polylog requires zero constant term");
  TruncSeries acc(n);
  TruncSeries p = TruncSeries::constant(Rat(1), n);
  for (int i = 1; i < n; ++i) {
    p = ser_mul(p, f);
    acc = ser_add(acc, ser_scale(Rat(Int(1), int_pow(Int(i), k)), p));
  }
  return acc;
}

Rat egf_coeff(const TruncSeries& f, unsigned n) {
  if (static_cast<int>(n) >= f.order())
    throw std::domain_error("insufficient truncation order");
  return f.coeff(static_cast<int>(n)) * Rat(factorial(n));
}

TruncSeries poly_to_series(const Poly& p, int order) {
  std::vector<Rat> c(static_cast<size_t>(order));
  for (int i = 0; i <= p.degree() && i < order; ++i) c[i] = p.coeff(i);
  return TruncSeries(order, std::move(c));
}

TruncSeries poly_at_series(const Poly& p, const TruncSeries& g) {
  return ser_compose(poly_to_series(p, g.order()), g);
}

}  // namespace polyseq
