#include "polyseq/rational.hpp"

#include <sstream>
#include <stdexcept>

namespace polyseq {

Int factorial(unsigned n) {
  Int r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

Int binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  Int r = 1;
  for (unsigned i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;  // exact: product of i+1 consecutive integers
  }
  return r;
}

Int int_pow(const Int& base, unsigned e) {
  return boost::multiprecision::pow(base, e);
}

Rat binom(const Rat& a, unsigned j) {
  Rat num = 1;
  for (unsigned i = 0; i < j; ++i) num *= a - i;
  return num / Rat(factorial(j));
}

Rat pochhammer(const Rat& a, unsigned n) {
  Rat r = 1;
  for (unsigned i = 0; i < n; ++i) r *= a + i;
  return r;
}

Rat rat_pow(const Rat& base, long e) {
  if (e < 0) {
    if (base == 0) throw std::domain_error("rat_pow: zero base, negative exponent");
    return Rat(1) / rat_pow(base, -e);
  }
  Rat r = 1;
  Rat b = base;
  auto u = static_cast<unsigned long>(e);
  while (u) {
    if (u & 1u) r *= b;
    b *= b;
    u >>= 1;
  }
  return r;
}

Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

Rat rat_eps(unsigned d) { return Rat(Int(1), int_pow(Int(10), d)); }

Rat parse_rat(const std::string& s) {
  const std::invalid_argument bad("invalid rational: '" + s + "'");
  if (s.empty()) throw bad;
  try {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw bad;
    return Rat(num, den);
  } catch (const std::runtime_error&) {
    throw bad;
  }
}

std::string rat_str(const Rat& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

std::string rat_decimal(const Rat& r, unsigned digits) {
  Int num = numerator(r);
  const Int& den = denominator(r);
  const bool neg = num < 0;
  if (neg) num = -num;
  std::ostringstream os;
  if (neg) os << '-';
  os << Int(num / den);
  if (digits > 0) {
    Int scaled = (num % den) * int_pow(Int(10), digits) / den;
    std::string frac = scaled.str();
    os << '.' << std::string(digits - frac.size(), '0') << frac;
  }
  return os.str();
}

}  // namespace polyseq
