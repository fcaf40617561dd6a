#include "polyseq/enumerate.hpp"

#include "polyseq/polybernoulli.hpp"

#include <doctest.h>

#include <set>

using namespace polyseq;

TEST_SUITE("enumerate") {
  TEST_CASE("Callan sequences") {
    CHECK(enum_callan(0, 0) == 1);
    CHECK(enum_callan(1, 1) == 2);
    CHECK(enum_callan(2, 2) == 14);
    CHECK(enum_callan(3, 3) == 230);
    CHECK(enum_callan(5, 5) == pb_number(5, 5));
    CHECK(enum_abundant_callan(5, 4) == pb_poly_closed(5, 4));
    CHECK(Rat(enum_extended_callan(5, 4, 3)) == pb_poly_closed(5, 4).eval(Rat(3)));
    CHECK_THROWS_WITH_AS(enum_callan(8, 8), "enumeration bound", std::domain_error);
  }

  TEST_CASE("extended Callan sequences") {
    CHECK(enum_extended_callan(1, 1, 1) == 3);
    for (int n = 0; n <= 3; ++n)
      for (int k = 0; k <= 3; ++k)
        CHECK(enum_extended_callan(n, k, 0) == enum_callan(n, k));
    CHECK(Rat(enum_extended_callan(2, 2, 2)) == pb_poly_closed(2, 2).eval(Rat(2)));
  }

  TEST_CASE("the worked 3-extended example is a valid object") {
    CallanSequence cs;
    cs.ordinary_pairs = {{{5}, {6, 8}}, {{3, 6}, {4, 9}}, {{1, 2, 4}, {3}}};
    cs.extra_blue = {0};
    cs.extra_red = {0, 1};
    cs.special_red_blocks = {{5}, {}, {2, 7}};  // markers stripped; one block empty
    CHECK(valid_extended_callan(cs, 9, 6, 3));

    CallanSequence broken = cs;
    broken.special_red_blocks[0].push_back(6);  // red 6 now appears twice
    CHECK_FALSE(valid_extended_callan(broken, 9, 6, 3));
    CallanSequence wrong_r = cs;
    wrong_r.special_red_blocks.pop_back();
    CHECK_FALSE(valid_extended_callan(wrong_r, 9, 6, 3));
  }

  TEST_CASE("abundant Callan sequences") {
    CHECK(enum_abundant_callan(1, 1) == Poly(std::vector<Rat>{Rat(2), Rat(1)}));  // x + 2
    for (int k = 0; k <= 3; ++k) CHECK(enum_abundant_callan(0, k) == Poly(Rat(1)));
    CHECK(enum_abundant_callan(2, 2) == pb_poly_closed(2, 2));
  }

  TEST_CASE("type-C filter") {
    for (int k = 0; k <= 3; ++k) CHECK(enum_typeC(0, k) == 1);
    CHECK(enum_typeC(1, 1) == 1);
    // pb closed form at -1: x^2 + 8x + 14 evaluated at -1
    CHECK(enum_typeC(2, 2) == 7);
    CHECK(enum_typeC(2, 2) == pb_typeC(2, 2));
  }

  TEST_CASE("E-sequences, counts with folded decorations") {
    CHECK(enum_esequences(3, 2, true) == 493);
    for (int k = 0; k <= 3; ++k) CHECK(enum_esequences(1, k, true) == 1);
    CHECK(enum_esequences(2, 1, false) == 37);
    CHECK_THROWS_WITH_AS(enum_esequences(5, 4, true), "enumeration bound", std::domain_error);
  }

  TEST_CASE("decorated stream agrees with the folded count") {
    for (bool odd : {true, false}) {
      Int streamed = 0;
      std::set<std::string> seen;
      for_each_esequence(2, 1, odd, [&](const ESequence& es) {
        ++streamed;
        seen.insert(render_esequence(es));
      });
      CHECK(streamed == enum_esequences(2, 1, odd));
      CHECK(Int(seen.size()) == streamed);
    }
  }

  TEST_CASE("run permutations") {
    CHECK(enum_runperms(2, 2) == Poly(std::vector<Rat>{Rat(1), Rat(7), Rat(4)}));
    for (int r = 0; r <= 4; ++r) CHECK(enum_runperms(0, r) == Poly(Rat(1)));
    CHECK(enum_runperms(3, 0) == Poly(std::vector<Rat>{Rat(1), Rat(4), Rat(1)}));
    CHECK_THROWS_AS(enum_runperms(6, 6), std::domain_error);
  }

  TEST_CASE("weighted Stirling enumerations") {
    CHECK(enum_s1_weighted(3, 1) == Poly(std::vector<Rat>{Rat(2), Rat(6), Rat(3)}));
    CHECK(enum_s2_weighted(2, 1) == Poly(std::vector<Rat>{Rat(1), Rat(2)}));
    for (int n = 0; n <= 5; ++n) CHECK(enum_s2_weighted(n, n) == Poly(Rat(1)));
  }

  TEST_CASE("cycle-substitution pairs") {
    CHECK(enum_cs(1, 1, Rat(0), Rat(1)) == Rat(3));
    for (int k = 0; k <= 3; ++k) CHECK(enum_cs(0, k, Rat(5, 7), Rat(-2, 3)) == Rat(1));
    CHECK(enum_cs(3, 2, Rat(1), Rat(1)) == Rat(300));
    CHECK_THROWS_AS(enum_cs(6, 1, Rat(1), Rat(1)), std::domain_error);
  }

  TEST_CASE("generators emit distinct objects, rendered in block notation") {
    std::set<std::string> seen;
    Int cnt = 0;
    for_each_callan({1}, 1, [&](const CallanSequence& cs) {
      ++cnt;
      seen.insert(render_callan(cs));
    });
    CHECK(cnt == 2);
    CHECK(seen.count("(b*,b1,r*,r1)") == 1);
    CHECK(seen.count("(b1,r1)(b*,r*)") == 1);

    seen.clear();
    cnt = 0;
    for_each_callan({1, 2}, 2, [&](const CallanSequence& cs) {
      ++cnt;
      seen.insert(render_callan(cs));
    });
    CHECK(cnt == 14);
    CHECK(Int(seen.size()) == cnt);
  }

  TEST_CASE("stream uniqueness for extended and abundant generators") {
    std::set<std::string> seen;
    Int cnt = 0;
    for_each_extended_callan(2, 1, 2, [&](const CallanSequence& cs) {
      ++cnt;
      seen.insert(render_callan(cs));
    });
    CHECK(cnt == enum_extended_callan(2, 1, 2));
    CHECK(Int(seen.size()) == cnt);

    seen.clear();
    cnt = 0;
    for_each_abundant_callan(2, 2, [&](const CallanSequence& cs) {
      ++cnt;
      seen.insert(render_callan(cs));
    });
    CHECK(Int(seen.size()) == cnt);
    CHECK(Rat(cnt) == enum_abundant_callan(2, 2).eval(Rat(1)));
  }

  TEST_CASE("abundant and extended streams carry their blocks") {
    Int cnt = 0;
    bool saw_rbar = false;
    for_each_abundant_callan(1, 1, [&](const CallanSequence& cs) {
      ++cnt;
      if (!cs.abundant_block.empty()) {
        saw_rbar = true;
        CHECK(render_callan(cs) == "(b*,b1,r*)|r1");
      }
    });
    CHECK(cnt == 3);  // x + 2 at x = 1
    CHECK(saw_rbar);

    cnt = 0;
    for_each_extended_callan(1, 1, 1, [&](const CallanSequence& cs) { ++cnt; });
    CHECK(cnt == 3);
  }
}
