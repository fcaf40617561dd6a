#include "polyseq/series.hpp"

#include <doctest.h>

#include <fstream>
#include <random>

using namespace polyseq;

namespace {

TruncSeries random_zero_const(std::mt19937& rng, int order) {
  std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
  std::vector<Rat> c(static_cast<size_t>(order));
  for (int i = 1; i < order; ++i) c[static_cast<size_t>(i)] = Rat(num(rng), den(rng));
  return TruncSeries(order, std::move(c));
}

}  // namespace

TEST_SUITE("series") {
  TEST_CASE("multiplication") {
    TruncSeries one_p(3, {Rat(1), Rat(1)});
    TruncSeries one_m(3, {Rat(1), Rat(-1)});
    CHECK(ser_mul(one_p, one_m) == TruncSeries(3, {Rat(1), Rat(0), Rat(-1)}));
    TruncSeries f(5, {Rat(2), Rat(3), Rat(0), Rat(1, 7)});
    CHECK(ser_mul(f, TruncSeries::constant(Rat(1), 5)) == f);
    // e^t e^{-t} = 1, every coefficient through the order
    TruncSeries et = ser_exp(TruncSeries::t(5));
    TruncSeries emt = ser_exp(ser_scale(Rat(-1), TruncSeries::t(5)));
    CHECK(ser_mul(et, emt) == TruncSeries::constant(Rat(1), 5));
  }

  TEST_CASE("exponential") {
    CHECK(ser_exp(TruncSeries(6)) == TruncSeries::constant(Rat(1), 6));
    CHECK(ser_exp(TruncSeries::t(6)).coeff(3) == Rat(1, 6));
    CHECK(egf_coeff(ser_exp(ser_scale(Rat(2), TruncSeries::t(6))), 3) == Rat(8));
    CHECK_THROWS_WITH_AS(ser_exp(TruncSeries::constant(Rat(1), 4)),
                         "exp requires zero constant term", std::domain_error);
  }

  TEST_CASE("square root") {
    TruncSeries perfect(4, {Rat(1), Rat(2), Rat(1)});
    CHECK(ser_sqrt(perfect) == TruncSeries(4, {Rat(1), Rat(1)}));
    CHECK(ser_sqrt(TruncSeries::constant(Rat(1), 4)) == TruncSeries::constant(Rat(1), 4));
    TruncSeries g(5, {Rat(1), Rat(0), Rat(-1)});  // 1 - t^2
    TruncSeries root = ser_sqrt(g);
    CHECK(root == TruncSeries(5, {Rat(1), Rat(0), Rat(-1, 2), Rat(0), Rat(-1, 8)}));
    CHECK(ser_mul(root, root) == g);
    CHECK_THROWS_WITH_AS(ser_sqrt(TruncSeries(3, {Rat(2)})), "non-square constant term",
                         std::domain_error);
    CHECK_THROWS_AS(ser_sqrt(TruncSeries::t(3)), std::domain_error);
  }

  TEST_CASE("division with valuation cancellation") {
    CHECK(ser_div(TruncSeries::monomial(2, Rat(1), 5), TruncSeries::t(5)) ==
          TruncSeries::t(4));
    TruncSeries num(4, {Rat(1), Rat(0), Rat(-1)});
    TruncSeries den(4, {Rat(1), Rat(-1)});
    CHECK(ser_div(num, den) == TruncSeries(4, {Rat(1), Rat(1)}));
    // t/(1-e^{-t}): the Bernoulli EGF with +1/2 convention
    TruncSeries z = ser_sub(TruncSeries::constant(Rat(1), 5),
                            ser_exp(ser_scale(Rat(-1), TruncSeries::t(5))));
    TruncSeries q = ser_div(TruncSeries::t(5), z);
    CHECK(q.order() == 4);
    CHECK(q.coeff(0) == Rat(1));
    CHECK(q.coeff(1) == Rat(1, 2));
    CHECK(q.coeff(2) == Rat(1, 12));
    CHECK(ser_mul(q, TruncSeries(4, z.coeffs())) == TruncSeries::t(4));
    CHECK_THROWS_WITH_AS(ser_div(TruncSeries::t(4), TruncSeries::monomial(2, Rat(1), 4)),
                         "non-formal quotient", std::domain_error);
    CHECK_THROWS_WITH_AS(ser_div(TruncSeries::t(4), TruncSeries(4)),
                         "division by zero series", std::domain_error);
  }

  TEST_CASE("integration and the arcsin expansion") {
    CHECK(ser_integrate(TruncSeries::constant(Rat(1), 2)) ==
          TruncSeries(3, {Rat(0), Rat(1)}));
    CHECK(ser_integrate(ser_scale(Rat(2), TruncSeries::t(3))) ==
          TruncSeries::monomial(2, Rat(1), 4));

    TruncSeries g(7, {Rat(1), Rat(0), Rat(-1)});
    TruncSeries arcsin = ser_integrate(ser_div(TruncSeries::constant(Rat(1), 7), ser_sqrt(g)));
    CHECK(arcsin.coeff(1) == Rat(1));
    CHECK(arcsin.coeff(3) == Rat(1, 6));
    CHECK(arcsin.coeff(5) == Rat(3, 40));
    // sine composed with it returns the identity
    std::vector<Rat> sc(8, Rat(0));
    for (int m = 0; 2 * m + 1 < 8; ++m)
      sc[static_cast<size_t>(2 * m + 1)] =
          Rat(Int(m % 2 == 0 ? 1 : -1), factorial(static_cast<unsigned>(2 * m + 1)));
    CHECK(ser_compose(TruncSeries(8, std::move(sc)), arcsin) == TruncSeries::t(8));
  }

  TEST_CASE("polylogarithms") {
    TruncSeries t4 = TruncSeries::t(4);
    CHECK(polylog_neg(0, t4) == TruncSeries(4, {Rat(0), Rat(1), Rat(1), Rat(1)}));
    CHECK(polylog_neg(1, t4) == TruncSeries(4, {Rat(0), Rat(1), Rat(2), Rat(3)}));
    CHECK(polylog_neg(3, TruncSeries(5)) == TruncSeries(5));
    CHECK(polylog_pos(1, t4) == TruncSeries(4, {Rat(0), Rat(1), Rat(1, 2), Rat(1, 3)}));
    CHECK(polylog_pos(2, t4).coeff(2) == Rat(1, 4));
    CHECK_THROWS_AS(polylog_neg(1, TruncSeries::constant(Rat(1), 4)), std::domain_error);
    // Li_1(1-e^{-t})/(1-e^{-t}) equals t/(1-e^{-t})
    TruncSeries z = ser_sub(TruncSeries::constant(Rat(1), 5),
                            ser_exp(ser_scale(Rat(-1), TruncSeries::t(5))));
    TruncSeries q = ser_div(polylog_pos(1, z), z);
    CHECK(q.coeff(0) == Rat(1));
    CHECK(q.coeff(1) == Rat(1, 2));
    CHECK(q.coeff(2) == Rat(1, 12));
  }

  TEST_CASE("egf coefficient extraction") {
    TruncSeries e2 = ser_exp(ser_scale(Rat(2), TruncSeries::t(6)));
    CHECK(egf_coeff(e2, 3) == Rat(8));
    CHECK(egf_coeff(ser_exp(TruncSeries::t(3)), 0) == Rat(1));
    CHECK_THROWS_WITH_AS(egf_coeff(e2, 6), "insufficient truncation order", std::domain_error);
    // Li_{-1}(1-e^{-t})/(1-e^{-t}) has second EGF coefficient 2
    TruncSeries z = ser_sub(TruncSeries::constant(Rat(1), 6),
                            ser_exp(ser_scale(Rat(-1), TruncSeries::t(6))));
    CHECK(egf_coeff(ser_div(polylog_neg(1, z), z), 1) == Rat(2));
  }

  TEST_CASE("exp is a homomorphism and other properties") {
    std::mt19937 rng(2024);
    for (int i = 0; i < 12; ++i) {
      TruncSeries f = random_zero_const(rng, 12), g = random_zero_const(rng, 12);
      CHECK(ser_exp(ser_add(f, g)) == ser_mul(ser_exp(f), ser_exp(g)));
      TruncSeries h = ser_add(TruncSeries::constant(Rat(1), 12), f);
      CHECK(ser_mul(ser_sqrt(h), ser_sqrt(h)) == h);
      CHECK(ser_div(ser_mul(f, h), h) == f);
      CHECK(ser_derivative(ser_integrate(f)) == f);
    }
  }

  TEST_CASE("negative polylog matches the Euler operator route") {
    const int ord = 12;
    // t/(1-t)
    std::vector<Rat> geo(ord, Rat(1));
    geo[0] = Rat(0);
    TruncSeries base(ord, std::move(geo));
    for (unsigned k = 0; k <= 6; ++k) {
      TruncSeries expected = base;
      for (unsigned i = 0; i < k; ++i) {
        std::vector<Rat> c(static_cast<size_t>(ord));
        for (int j = 0; j < ord; ++j) c[static_cast<size_t>(j)] = Rat(j) * expected.coeff(j);
        expected = TruncSeries(ord, std::move(c));
      }
      CHECK(polylog_neg(k, TruncSeries::t(ord)) == expected);
    }
  }

  TEST_CASE("sech coefficients match the vendored fixture") {
    const int ord = 22;
    TruncSeries t = TruncSeries::t(ord);
    TruncSeries cosh = ser_scale(Rat(1, 2), ser_add(ser_exp(t), ser_exp(ser_scale(Rat(-1), t))));
    TruncSeries sech = ser_div(TruncSeries::constant(Rat(1), ord), cosh);
    std::ifstream in(std::string(POLYSEQ_DATA_DIR) + "/A028296.txt");
    REQUIRE(in.good());
    std::string line;
    int m = 0;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      CHECK(egf_coeff(sech, static_cast<unsigned>(2 * m)) == parse_rat(line));
      if (2 * m + 1 < ord) CHECK(egf_coeff(sech, static_cast<unsigned>(2 * m + 1)) == Rat(0));
      ++m;
    }
    CHECK(m == 11);
  }
}
