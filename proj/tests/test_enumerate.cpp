#include "doctest.h"
#include "helpers.hpp"
#include "jd/enumerate.hpp"

using namespace jd;
using namespace jdtest;

TEST_CASE("degree 1 connected trivalent diagrams: just theta") {
  EnumOptions opt;
  opt.connectedOnly = true;
  opt.trivalentOnly = true;
  auto out = enumerateDiagrams({emptySkeleton(), 0}, 1, opt);
  REQUIRE(out.size() == 1);
  CHECK(out[0].enc == canonicalize(theta()).canon.enc);
}

TEST_CASE("degree 1 on one circle: the single chord") {
  auto out = enumerateDiagrams({circles(1), 0}, 1);
  REQUIRE(out.size() == 1);
  CHECK(out[0].enc == canonicalize(chordOnCircle()).canon.enc);
}

TEST_CASE("degree 0: the empty diagram") {
  auto out = enumerateDiagrams({emptySkeleton(), 0}, 0);
  REQUIRE(out.size() == 1);
  CHECK(out[0].rep.trivalent == 0);
  CHECK(out[0].rep.legCount() == 0);
}

TEST_CASE("degree census") {
  for (int m = 1; m <= 2; ++m)
    for (int k = 1; k <= 3; ++k)
      for (auto& c : enumerateDiagrams({circles(m), 0}, k))
        CHECK(c.rep.trivalent + c.rep.legCount() == 2 * k);
}

TEST_CASE("enumeration is deterministic and sorted") {
  auto a = enumerateDiagrams({circles(2), 0}, 2);
  auto b = enumerateDiagrams({circles(2), 0}, 2);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) CHECK(a[i].enc == b[i].enc);
  for (size_t i = 1; i < a.size(); ++i) CHECK(a[i - 1].enc < a[i].enc);
}

TEST_CASE("budget exhaustion raises a partial-result error") {
  EnumOptions opt;
  opt.budget = 1;
  CHECK_THROWS_AS(enumerateDiagrams({circles(2), 0}, 2, opt), BudgetError);
}

TEST_CASE("open diagram enumeration honors legsPerColor") {
  EnumOptions opt;
  opt.legsPerColor = {2, 2, 2};
  auto out = enumerateDiagrams({emptySkeleton(), 3}, 3, opt);
  CHECK(!out.empty());
  for (auto& c : out) {
    std::vector<int> cnt(4, 0);
    for (auto& l : c.rep.legs) cnt[l.color]++;
    CHECK(cnt[1] == 2);
    CHECK(cnt[2] == 2);
    CHECK(cnt[3] == 2);
  }
}

TEST_CASE("intervals of one string, degree 1") {
  // One chord (two leg orders collapse to one class) plus nothing else.
  auto out = enumerateDiagrams({intervals(1), 0}, 1);
  REQUIRE(out.size() == 1);
  CHECK(out[0].rep.trivalent == 0);
}
