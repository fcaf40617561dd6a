#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace polyseq {

// Exact arithmetic everywhere: arbitrary-precision integers and normalized
// rationals (positive denominator, gcd 1). No floating point in the library.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

Int factorial(unsigned n);
Int binomial(unsigned n, unsigned k);
Int int_pow(const Int& base, unsigned e);

// Generalized binomial a(a-1)...(a-j+1)/j! with rational top argument.
Rat binom(const Rat& a, unsigned j);

// Rising factorial a(a+1)...(a+n-1); empty product is 1.
Rat pochhammer(const Rat& a, unsigned n);

Rat rat_pow(const Rat& base, long e);
Rat rat_abs(const Rat& r);

// 10^-d as an exact rational, for tolerance thresholds.
Rat rat_eps(unsigned d);

Rat parse_rat(const std::string& s);   // "p/q" or "p"
std::string rat_str(const Rat& r);     // canonical "p/q" (or "p" if q = 1)

// Decimal expansion with `digits` places after the point, truncated toward
// zero. Display only; never used in computations.
std::string rat_decimal(const Rat& r, unsigned digits);

}  // namespace polyseq
