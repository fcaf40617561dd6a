#include "polyseq/stirling.hpp"

#include "polyseq/enumerate.hpp"

#include <doctest.h>

#include <thread>

using namespace polyseq;

namespace {

// Brute-force second-kind Stirling count straight from the definition.
Int count_partitions_into(int n, int m) {
  std::vector<int> elems;
  for (int i = 1; i <= n; ++i) elems.push_back(i);
  Int cnt = 0;
  for_each_partition(elems, [&](const std::vector<std::vector<int>>& p) {
    if (static_cast<int>(p.size()) == m) ++cnt;
  });
  return cnt;
}

}  // namespace

TEST_SUITE("stirling") {
  TEST_CASE("second kind, classical") {
    CHECK(stirling2(3, 2) == 3);
    for (int n = 0; n <= 8; ++n) CHECK(stirling2(n, n) == 1);
    CHECK(stirling2(4, 2) == 7);
    CHECK(stirling2(4, 2) == count_partitions_into(4, 2));
    CHECK(stirling2(5, 7) == 0);
    for (int n = 1; n <= 7; ++n)
      for (int m = 0; m <= n; ++m) CHECK(stirling2(n, m) == count_partitions_into(n, m));
  }

  TEST_CASE("weighted second kind") {
    CHECK(stirling2_weighted(2, 1) == Poly(std::vector<Rat>{Rat(1), Rat(2)}));  // 2x+1
    CHECK(stirling2_weighted(2, 1) == enum_s2_weighted(2, 1));
    for (int n = 0; n <= 6; ++n) CHECK(stirling2_weighted(n, 0) == Poly::monomial(static_cast<unsigned>(n)));
    CHECK(stirling2_weighted(2, 2) == Poly(Rat(1)));
    CHECK(stirling2_weighted(3, 5).is_zero());
  }

  TEST_CASE("r-Stirling specializations") {
    CHECK(rstirling2(2, 1, 1) == 3);
    CHECK(rstirling2(2, 1, 1) == stirling2(3, 2));
    for (int n = 0; n <= 6; ++n)
      for (int m = 0; m <= n; ++m) CHECK(rstirling2(n, m, 0) == stirling2(n, m));
    CHECK(rstirling2(1, 1, 2) == 1);
  }

  TEST_CASE("weighted first kind") {
    CHECK(stirling1_weighted(3, 1) == Poly(std::vector<Rat>{Rat(2), Rat(6), Rat(3)}));
    CHECK(stirling1_weighted(0, 0) == Poly(Rat(1)));
    CHECK(stirling1_weighted(2, 1) == Poly(std::vector<Rat>{Rat(1), Rat(2)}));
    CHECK(stirling1_weighted(2, 1) == enum_s1_weighted(2, 1));
    CHECK(stirling1_weighted(4, 6).is_zero());
    for (int n = 0; n <= 6; ++n)
      CHECK(stirling1_weighted(n, 0) == pochhammer(Poly::x(), static_cast<unsigned>(n)));
  }

  TEST_CASE("unsigned first kind cross-check") {
    CHECK(stirling1_unsigned(4, 2) == 11);
    for (int n = 0; n <= 8; ++n)
      for (int m = 0; m <= n; ++m)
        CHECK(stirling1_weighted(n, m).eval(Rat(1)) == Rat(stirling1_unsigned(n + 1, m + 1)));
  }

  TEST_CASE("specializations at 0 and 1") {
    for (int n = 0; n <= 10; ++n)
      for (int m = 0; m <= n; ++m) {
        CHECK(stirling2_weighted(n, m).eval(Rat(0)) == Rat(stirling2(n, m)));
        CHECK(stirling2_weighted(n, m).eval(Rat(1)) == Rat(stirling2(n + 1, m + 1)));
      }
  }

  TEST_CASE("concurrent lookups return identical values") {
    std::vector<Poly> serial;
    for (int m = 0; m <= 12; ++m) serial.push_back(stirling2_weighted(12, m));
    std::vector<std::vector<Poly>> got(4);
    std::vector<std::thread> workers;
    for (auto& slot : got)
      workers.emplace_back([&slot] {
        for (int m = 0; m <= 12; ++m) {
          slot.push_back(stirling2_weighted(12, m));
          slot.push_back(stirling1_weighted(11, m <= 11 ? m : 11));
        }
      });
    for (auto& w : workers) w.join();
    for (const auto& slot : got)
      for (int m = 0; m <= 12; ++m) CHECK(slot[2 * static_cast<size_t>(m)] == serial[m]);
  }
}
