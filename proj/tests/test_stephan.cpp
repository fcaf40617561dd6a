#include "polyseq/stephan.hpp"

#include <doctest.h>

#include <fstream>

using namespace polyseq;

TEST_SUITE("stephan") {
  TEST_CASE("Lehmer pair recursion") {
    PQPair init = pq(-1);
    CHECK(init.p.is_zero());
    CHECK(init.q == Poly(Rat(1)));
    CHECK(pq(0).p == Poly(Rat(1)));
    CHECK(pq(0).q == Poly(Rat(1)));
    CHECK(pq(1).p == Poly(Rat(3)));
    CHECK(pq(1).q == Poly(std::vector<Rat>{Rat(1), Rat(2)}));
    CHECK(pq(2).p == Poly(std::vector<Rat>{Rat(7), Rat(8)}));
    CHECK(pq(2).q == Poly(std::vector<Rat>{Rat(1), Rat(10), Rat(4)}));
    CHECK(pq(3).p == Poly(std::vector<Rat>{Rat(15), Rat(70), Rat(20)}));
  }

  TEST_CASE("a and b sequences") {
    CHECK(a_seq(0) == Rat(1));
    CHECK(b_seq(0) == 1);
    CHECK(a_seq(1) == Rat(2));
    CHECK(b_seq(1) == 2);
    CHECK(a_seq(3) == Rat(10));
    CHECK(b_seq(3) == 10);
    std::ifstream in(std::string(POLYSEQ_DATA_DIR) + "/A098830.txt");
    REQUIRE(in.good());
    std::string line;
    int n = 0;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      Int want(line);
      CHECK(a_seq(n) == Rat(want));
      CHECK(b_seq(n) == want);
      ++n;
    }
    CHECK(n == 13);
  }

  TEST_CASE("shared recursion and differential equation") {
    CHECK(a_recursion_check(0));  // 3 a_1 = 2 + 1 + 3
    CHECK(a_recursion_check(1));  // 3 a_2 = 12, a_2 = 4
    CHECK(a_seq(2) == Rat(4));
    CHECK(ab_recursion_check(20));
  }

  TEST_CASE("the conjecture sweep") {
    CHECK(stephan_check(30));
    for (int n = 0; n <= 30; ++n) CHECK(denominator(a_seq(n)) == 1);
  }

  TEST_CASE("central binomial series values") {
    PiSqrt3Value z0 = zeta_cb_neg(0);
    CHECK(z0.u == Rat(1, 3));
    CHECK(z0.v == Rat(2, 9));
    PiSqrt3Value z1 = zeta_cb_neg(1);
    CHECK(z1.u == Rat(2, 3));
    CHECK(z1.v == Rat(2, 9));
    CHECK(rat_abs(z0.approx() - zeta_cb_partial(0, 200)) < rat_eps(12));
    for (int k = 0; k <= 8; ++k) {
      PiSqrt3Value z = zeta_cb_neg(k);
      CHECK(rat_abs(z.approx() - zeta_cb_partial(k, 200)) < rat_eps(10));
    }
    CHECK(z0.str() == "1/3 + 2/9*pi/sqrt(3)");
    CHECK(rat_decimal(z0.approx(), 10) == "0.7363998587");
    CHECK(z0 + z1 == PiSqrt3Value{Rat(1), Rat(4, 9)});
    CHECK(Rat(3) * z0 == PiSqrt3Value{Rat(1), Rat(2, 3)});
  }

  TEST_CASE("q via half-integer Eulerian polynomials") {
    CHECK(q_eulerian_check(0));
    CHECK(q_eulerian_check(1));  // (2x)(1/(2x) + 1) = 2x + 1
    for (int n = 0; n <= 12; ++n) CHECK(q_eulerian_check(n));
  }

  TEST_CASE("p via Eulerian polynomials and q convolution") {
    CHECK(p_explicit_check(0));
    CHECK(p_explicit_check(1));  // 2 + C(1,1) q_0 q_{-1} = 3
    for (int n = 0; n <= 12; ++n) CHECK(p_explicit_check(n));
  }

  TEST_CASE("central binomial power series identity") {
    CHECK(lehmer_series_check(-1, 12));
    CHECK(lehmer_series_check(0, 12));
    CHECK(lehmer_series_check(5, 14));
    CHECK_THROWS_AS(lehmer_series_check(0, 3), std::invalid_argument);
  }

  TEST_CASE("F terms and poles") {
    CHECK(f_term(0, Rat(9, 2), Rat(11, 3)) == Rat(1));
    CHECK(f_term(1, Rat(5), Rat(5)) == Rat(1, 25));
    CHECK(f_term(2, Rat(5), Rat(5)) == Rat(1, 225));
    CHECK(f_term(-1, Rat(1), Rat(1)) == Rat(0));
    try {
      f_term(4, Rat(-3), Rat(2));
      FAIL("expected a pole error");
    } catch (const std::domain_error& e) {
      CHECK(std::string(e.what()).find("pole of F_j") == 0);
    }
  }

  TEST_CASE("contiguous transformation") {
    CHECK(trans_check(0, Rat(7, 2), Rat(5, 2)));
    CHECK(trans_check(1, Rat(7, 2), Rat(5, 2)));
    for (int j = 0; j <= 20; ++j) CHECK(trans_check(j, Rat(9, 2), Rat(7, 2)));
  }

  TEST_CASE("key equality partial sums") {
    const Rat tol = rat_eps(10);
    CHECK(key_equality_check(Rat(-1, 3), 200, tol));
    CHECK(key_equality_check(Rat(-1, 2), 200, tol));
    CHECK(key_equality_check(Rat(-1), 200, tol));
    // fast decay at x = -1/3: the gap itself is far below the tolerance
    CHECK(key_equality_gap(Rat(-1, 3), 200) < tol);
    // the gap never exceeds the proven truncation bound
    for (const Rat& x : {Rat(-1, 3), Rat(-1, 2), Rat(-1)})
      CHECK(key_equality_gap(x, 200) <= key_equality_tail_bound(x, 200));
    CHECK_THROWS_AS(key_equality_check(Rat(-1), 5, tol), std::invalid_argument);
    try {
      key_equality_check(Rat(1, 5), 200, tol);
      FAIL("expected a pole error");
    } catch (const std::domain_error& e) {
      CHECK(std::string(e.what()).find("pole of F_j") == 0);
    }
  }

  TEST_CASE("ordinary generating function for b") {
    CHECK(bn_ogf_check(0, 1));
    CHECK(bn_ogf_check(2, 1));
    CHECK(bn_ogf_check(20, 10));
    CHECK_THROWS_AS(bn_ogf_check(10, 2), std::invalid_argument);
  }
}
