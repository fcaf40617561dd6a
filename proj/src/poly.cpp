#include "polyseq/poly.hpp"

#include <sstream>

namespace polyseq {

Poly::Poly(const Rat& c) : c_{c} { normalize(); }

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { normalize(); }

Poly Poly::x() { return monomial(1); }

Poly Poly::monomial(unsigned i, const Rat& c) {
  std::vector<Rat> v(i + 1, Rat(0));
  v[i] = c;
  return Poly(std::move(v));
}

void Poly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rat Poly::coeff(unsigned i) const {
  return i < c_.size() ? c_[i] : Rat(0);
}

Rat Poly::eval(const Rat& a) const {
  Rat r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * a + *it;
  return r;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Rat> d(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = Rat(i) * c_[i];
  return Poly(std::move(d));
}

Poly Poly::shifted_arg(const Rat& c) const {
  // Horner in the shifted variable: result = (...(p_d (X+c) + p_{d-1})(X+c)...)
  Poly shift(std::vector<Rat>{c, Rat(1)});
  Poly r;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * shift + Poly(*it);
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly r(Rat(1));
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  normalize();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  normalize();
  return *this;
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly r = a;
  r += b;
  return r;
}

Poly operator-(const Poly& a, const Poly& b) {
  Poly r = a;
  r -= b;
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rat> r(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(r));
}

Poly operator*(const Rat& s, const Poly& p) {
  if (s == 0) return Poly();
  std::vector<Rat> r = p.c_;
  for (auto& c : r) c *= s;
  return Poly(std::move(r));
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rat& c = c_[i];
    if (c == 0) continue;
    Rat a = c < 0 ? Rat(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    const bool unit = (a == 1) && i > 0;
    if (!unit) os << rat_str(a);
    if (i > 0) {
      if (!unit) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

Poly pochhammer(const Poly& p, unsigned n) {
  Poly r(Rat(1));
  for (unsigned i = 0; i < n; ++i) r = r * (p + Poly(Rat(i)));
  return r;
}

}  // namespace polyseq
