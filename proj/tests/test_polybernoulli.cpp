#include "polyseq/polybernoulli.hpp"

#include "polyseq/enumerate.hpp"

#include <doctest.h>

using namespace polyseq;

TEST_SUITE("polybernoulli") {
  TEST_CASE("closed form") {
    for (int k = 0; k <= 5; ++k) CHECK(pb_poly_closed(0, k) == Poly(Rat(1)));
    CHECK(pb_poly_closed(1, 1) == Poly(std::vector<Rat>{Rat(2), Rat(1)}));  // x + 2
    CHECK(pb_poly_closed(2, 2).eval(Rat(0)) == Rat(14));
    CHECK(Rat(enum_callan(2, 2)) == pb_poly_closed(2, 2).eval(Rat(0)));
  }

  TEST_CASE("sieve form") {
    CHECK(pb_poly_sieve(1, 1).eval(Rat(1)) == Rat(3));
    CHECK(Rat(enum_extended_callan(1, 1, 1)) == pb_poly_sieve(1, 1).eval(Rat(1)));
    for (int n = 0; n <= 5; ++n) {
      Poly want = Poly(std::vector<Rat>{Rat(1), Rat(1)}).pow(static_cast<unsigned>(n));
      CHECK(pb_poly_sieve(n, 0) == want);  // (x+1)^n
    }
    CHECK(pb_poly_sieve(2, 2) == pb_poly_closed(2, 2));
  }

  TEST_CASE("binomial expansion form") {
    for (int k = 0; k <= 5; ++k) {
      CHECK(pb_poly_binomial(0, k) == Poly(Rat(1)));
      Poly want(std::vector<Rat>{Rat(int_pow(Int(2), static_cast<unsigned>(k))), Rat(1)});
      CHECK(pb_poly_binomial(1, k) == want);  // x + 2^k
    }
    CHECK(pb_poly_binomial(2, 1) == Poly(std::vector<Rat>{Rat(4), Rat(4), Rat(1)}));
  }

  TEST_CASE("three polynomial routes agree") {
    for (int n = 0; n <= 7; ++n)
      for (int k = 0; k <= 7; ++k) {
        Poly closed = pb_poly_closed(n, k);
        CHECK(closed == pb_poly_sieve(n, k));
        CHECK(closed == pb_poly_binomial(n, k));
      }
  }

  TEST_CASE("EGF route") {
    CHECK(pb_egf(1, 1, Rat(0)) == Rat(1, 2));
    CHECK(pb_egf(1, -1, Rat(0)) == Rat(2));
    for (int n = 0; n <= 6; ++n)
      for (int k = 0; k <= 6; ++k)
        for (int i = -2; i <= 2; ++i)
          CHECK(pb_egf(n, -k, Rat(i, 3)) == pb_poly_closed(n, k).eval(Rat(i, 3)));
    // (-1)^1 B_1^{(1)}(-x) = x - 1/2, the classical Bernoulli polynomial
    for (int i = 0; i < 5; ++i) {
      Rat x(2 * i + 1, 4);
      CHECK(-pb_egf(1, 1, -x) == x - Rat(1, 2));
    }
  }

  TEST_CASE("type-C values") {
    CHECK(pb_typeC(0, 0) == 1);
    for (int k = 0; k <= 5; ++k)
      CHECK(pb_typeC(1, k) == int_pow(Int(2), static_cast<unsigned>(k)) - 1);
    CHECK(pb_typeC(2, 2) == enum_typeC(2, 2));
  }

  TEST_CASE("symmetric C-function") {
    CHECK(c_sym_binomial(1, 1, 0, 0) == 2);
    CHECK(c_sym_stirling(1, 1, 0, 0) == 2);
    for (int k = 0; k <= 4; ++k)
      for (int r = 0; r <= 3; ++r)
        for (int s = 0; s <= 3; ++s) {
          CHECK(c_sym_stirling(0, k, r, s) == int_pow(Int(s + 1), static_cast<unsigned>(k)));
          CHECK(c_sym_binomial(2, k, r, s) == c_sym_stirling(2, k, r, s));
          CHECK(c_sym_binomial(2, k, r, s) == c_sym_binomial(k, 2, s, r));
        }
  }

  TEST_CASE("hypersums") {
    CHECK(hypersum(1, 0, 2) == 3);
    CHECK(hypersum(1, 1, 2) == 4);  // S_1(1) + S_1(2)
    for (int k = 0; k <= 4; ++k)
      for (int r = 0; r <= 3; ++r) CHECK(hypersum(k, r, 0) == 0);
    CHECK(hypersum(2, 1, 4) == 50);  // 1 + 5 + 14 + 30
  }

  TEST_CASE("Stirling/poly-Bernoulli identity") {
    CHECK(ber_hypersum_lhs(1, 1, Rat(0), Rat(1)) == Rat(3));
    CHECK(ber_hypersum_rhs(1, 1, Rat(0), Rat(1)) == Rat(3));
    CHECK(ber_hypersum_check(0, 3, Rat(0), Rat(0)));
    CHECK(ber_hypersum_check(3, 2, Rat(1), Rat(1)));
    // right side specializes to n! S_k^{(m+r-1)}(n+1)
    CHECK(ber_hypersum_rhs(3, 2, Rat(1), Rat(1)) ==
          Rat(factorial(3)) * Rat(hypersum(2, 1, 4)));
    for (int n = 0; n <= 5; ++n)
      for (int k = 0; k <= 3; ++k) CHECK(ber_hypersum_check(n, k, Rat(1, 2), Rat(-1, 3)));
  }

  TEST_CASE("number symmetry") {
    for (int n = 0; n <= 8; ++n)
      for (int k = 0; k <= 8; ++k) CHECK(pb_number(n, k) == pb_number(k, n));
  }
}
