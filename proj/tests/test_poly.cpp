#include "polyseq/poly.hpp"

#include <doctest.h>

#include <random>

using namespace polyseq;

namespace {

Poly random_poly(std::mt19937& rng, int max_deg) {
  std::uniform_int_distribution<int> deg(0, max_deg), num(-9, 9), den(1, 5);
  std::vector<Rat> c(static_cast<size_t>(deg(rng)) + 1);
  for (auto& v : c) v = Rat(num(rng), den(rng));
  return Poly(std::move(c));
}

}  // namespace

TEST_SUITE("poly") {
  TEST_CASE("zero polynomial") {
    Poly z;
    CHECK(z.is_zero());
    CHECK(z.degree() == -1);
    CHECK(z.eval(Rat(7, 3)) == Rat(0));
    CHECK(Poly(Rat(0)).is_zero());
    CHECK(Poly(std::vector<Rat>{Rat(1), Rat(0), Rat(0)}).degree() == 0);
  }

  TEST_CASE("pochhammer on polynomials") {
    CHECK(pochhammer(Poly::x(), 0) == Poly(Rat(1)));
    CHECK(pochhammer(Poly::x(), 2) == Poly(std::vector<Rat>{Rat(0), Rat(1), Rat(1)}));  // X^2+X
  }

  TEST_CASE("Horner evaluation") {
    Poly p(std::vector<Rat>{Rat(0), Rat(1), Rat(1)});  // X^2 + X
    CHECK(poly_eval(p, Rat(2)) == Rat(6));
    Poly q(std::vector<Rat>{Rat(2), Rat(6), Rat(3)});  // 3X^2 + 6X + 2
    CHECK(poly_eval(q, Rat(1)) == Rat(11));
  }

  TEST_CASE("argument shift") {
    Poly sq = Poly::x() * Poly::x();
    CHECK(sq.shifted_arg(Rat(1)) == Poly(std::vector<Rat>{Rat(1), Rat(2), Rat(1)}));
    std::mt19937 rng(7);
    for (int i = 0; i < 50; ++i) {
      Poly p = random_poly(rng, 6);
      Rat a(3, 2);
      CHECK(p.shifted_arg(Rat(5, 7)).eval(a) == p.eval(a + Rat(5, 7)));
    }
  }

  TEST_CASE("ring laws and evaluation morphism") {
    std::mt19937 rng(42);
    for (int i = 0; i < 60; ++i) {
      Poly p = random_poly(rng, 6), q = random_poly(rng, 6);
      Rat a(-4, 3);
      CHECK((p * q).eval(a) == p.eval(a) * q.eval(a));
      CHECK((p + q).eval(a) == p.eval(a) + q.eval(a));
      if (!p.is_zero() && !q.is_zero()) CHECK((p * q).degree() == p.degree() + q.degree());
    }
  }

  TEST_CASE("derivative") {
    Poly p(std::vector<Rat>{Rat(2), Rat(6), Rat(3)});
    CHECK(p.derivative() == Poly(std::vector<Rat>{Rat(6), Rat(6)}));
    CHECK(Poly(Rat(5)).derivative().is_zero());
  }

  TEST_CASE("rendering") {
    CHECK(Poly(std::vector<Rat>{Rat(1), Rat(7), Rat(4)}).str() == "4*x^2 + 7*x + 1");
    CHECK(Poly(std::vector<Rat>{Rat(2), Rat(1, 2)}).str() == "1/2*x + 2");
    CHECK(Poly(std::vector<Rat>{Rat(0), Rat(-1), Rat(1)}).str() == "x^2 - x");
    CHECK(Poly().str() == "0");
  }
}
