#pragma once

#include "polyseq/rational.hpp"

#include <vector>

namespace polyseq {

// Dense univariate polynomial over Rat, low degree first, no trailing zeros.
// Normalization happens on construction, so structural equality coincides
// with mathematical equality. The zero polynomial has an empty coefficient
// list; degree() reports -1 for it (the "minus infinity" marker).
class Poly {
 public:
  Poly() = default;
  explicit Poly(const Rat& c);
  explicit Poly(std::vector<Rat> coeffs);

  static Poly x();
  static Poly monomial(unsigned i, const Rat& c = Rat(1));

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rat coeff(unsigned i) const;  // 0 beyond the degree
  const std::vector<Rat>& coeffs() const { return c_; }

  Rat eval(const Rat& a) const;
  Poly derivative() const;
  Poly shifted_arg(const Rat& c) const;  // p(X + c)
  Poly pow(unsigned e) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rat& s, const Poly& p);
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  std::string str(const std::string& var = "x") const;

 private:
  void normalize();
  std::vector<Rat> c_;
};

// Rising factorial p(p+1)...(p+n-1) of a polynomial argument.
Poly pochhammer(const Poly& p, unsigned n);

inline Rat poly_eval(const Poly& p, const Rat& a) { return p.eval(a); }

}  // namespace polyseq
