#include "doctest.h"
#include "helpers.hpp"
#include "jd/context.hpp"

using namespace jd;
using namespace jdtest;

namespace {

ContextOptions withKinds(std::vector<RelationKind> ks) {
  ContextOptions o;
  o.kinds = std::move(ks);
  return o;
}

long long dim(const Space& sp, int k, std::vector<RelationKind> ks) {
  return QuotientContext(sp, k, withKinds(std::move(ks))).dimension();
}

}  // namespace

TEST_CASE("merging the two ends of a chord is degenerate") {
  Diagram d = chordOnCircle();
  auto r = canonicalize(mergeLegs(d, 0, 1));
  CHECK(r.sign == 0);
}

TEST_CASE("unmerge then merge is the identity") {
  for (auto& c : enumerateDiagrams({circles(2), 0}, 3)) {
    const Diagram& d = c.rep;
    for (int j = 0; j < d.legCount(); ++j) {
      if (d.mate[3 * d.trivalent + j] >= 3 * d.trivalent) continue;
      Diagram up = unmergeLeg(d, j);
      validate(up);
      Diagram back = mergeLegs(up, up.legCount() - 2, up.legCount() - 1);
      auto r = canonicalize(back);
      CHECK(r.sign == 1);
      CHECK(r.canon.enc == c.enc);
    }
  }
}

TEST_CASE("surgery outputs validate") {
  for (auto& c : enumerateDiagrams({circles(1), 0}, 3)) {
    for (RelationKind k : {RelationKind::STU, RelationKind::AS,
                           RelationKind::IHX, RelationKind::FI})
      for (auto& inst : relationInstancesFor(c, k, true))
        for (auto& [enc, tc] : inst.terms()) validate(tc.first.rep);
  }
}

TEST_CASE("one-circle dimensions match the classical table") {
  long long plain[] = {1, 1, 2, 3, 6};
  long long reduced[] = {1, 0, 1, 1};
  for (int k = 0; k <= 4; ++k)
    CHECK(dim({circles(1), 0}, k, {RelationKind::STU}) == plain[k]);
  for (int k = 0; k <= 3; ++k)
    CHECK(dim({circles(1), 0}, k,
              {RelationKind::STU, RelationKind::FI}) == reduced[k]);
}

TEST_CASE("closing an interval does not change dimensions") {
  for (int k = 0; k <= 3; ++k)
    CHECK(dim({intervals(1), 0}, k, {RelationKind::STU}) ==
          dim({circles(1), 0}, k, {RelationKind::STU}));
}

TEST_CASE("AS and IHX instances already vanish modulo STU") {
  for (int m = 1; m <= 2; ++m) {
    Space sp{circles(m), 0};
    for (int k = 1; k <= 3; ++k) {
      QuotientContext ctx(sp, k, withKinds({RelationKind::STU}));
      for (const auto& g : ctx.generators()) {
        for (RelationKind kind : {RelationKind::AS, RelationKind::IHX}) {
          for (auto& inst : relationInstancesFor(g, kind)) {
            auto r = ctx.reduce(inst);
            CHECK(r.definitive);
            CHECK(r.normal.zero());
          }
        }
      }
      // ... so adjoining them cannot cut the dimension further.
      CHECK(ctx.dimension() ==
            dim(sp, k,
                {RelationKind::STU, RelationKind::AS, RelationKind::IHX}));
    }
  }
}

TEST_CASE("isolated chords die in the reduced quotient") {
  QuotientContext ctx({circles(1), 0}, 3,
                      withKinds({RelationKind::STU, RelationKind::FI}));
  for (const auto& g : ctx.generators()) {
    if (!hasIsolatedChord(g.rep)) continue;
    auto r = ctx.reduce(DiagramVector::single(g));
    CHECK(r.normal.zero());
  }
}

TEST_CASE("a circle carrying exactly one leg is zero in the quotient") {
  // If a circle carries exactly one leg and that leg's edge ends in a
  // trivalent vertex, un-merging exhibits the diagram as the merge of the
  // two sole legs of a rotation-symmetric source, which forces it to zero.
  // The elimination must see those sources even though they vanish
  // themselves.
  for (int k = 2; k <= 3; ++k) {
    QuotientContext ctx({circles(2), 0}, k, withKinds({RelationKind::STU}));
    int hits = 0;
    for (const auto& g : ctx.generators()) {
      const Diagram& d = g.rep;
      bool forced = false;
      for (int c = 1; c <= 2; ++c) {
        auto legs = legsOnComponent(d, c);
        forced |= legs.size() == 1 &&
                  d.mate[3 * d.trivalent + legs[0]] < 3 * d.trivalent;
      }
      if (!forced) continue;
      ++hits;
      CHECK(ctx.reduce(DiagramVector::single(g)).normal.zero());
    }
    CHECK(hits > 0);
  }
}

TEST_CASE("saturation agrees with full elimination") {
  Space sp{circles(1), 0};
  QuotientContext full(sp, 3, withKinds({RelationKind::STU}));
  for (const auto& g : full.generators()) {
    ContextOptions o = withKinds({RelationKind::STU});
    o.mode = ContextMode::Saturation;
    QuotientContext sat(sp, 3, {g}, o);
    CHECK(sat.status() == ContextStatus::Complete);
    DiagramVector v = DiagramVector::single(g);
    DiagramVector n1 = sat.reduce(v).normal;
    DiagramVector n2 = full.reduce(v).normal;
    CHECK(full.reduce(n1).normal == n2);
  }
}

TEST_CASE("a tiny budget yields a budgeted, non-definitive context") {
  ContextOptions o = withKinds({RelationKind::STU});
  o.mode = ContextMode::Saturation;
  o.budget = 2;
  auto gens = enumerateDiagrams({circles(1), 0}, 3);
  QuotientContext sat({circles(1), 0}, 3, {gens.back()}, o);
  CHECK(sat.status() == ContextStatus::Budgeted);
  CHECK_FALSE(sat.reduce(DiagramVector::single(gens.back())).definitive);
}

TEST_CASE("reduction rejects foreign diagrams") {
  QuotientContext ctx({circles(1), 0}, 2, withKinds({RelationKind::STU}));
  auto other = enumerateDiagrams({circles(1), 0}, 3);
  CHECK_THROWS_AS(ctx.reduce(DiagramVector::single(other.front())), Error);
}

TEST_CASE("STU needs a skeleton") {
  CHECK_THROWS_AS(QuotientContext({emptySkeleton(), 2}, 2,
                                  withKinds({RelationKind::STU})),
                  Error);
}

TEST_CASE("context serialization round-trips and self-checks") {
  QuotientContext ctx({circles(2), 0}, 2,
                      withKinds({RelationKind::STU, RelationKind::FI}));
  std::string text = ctx.writeText();
  QuotientContext back = QuotientContext::readText(text);
  CHECK(back.writeText() == text);
  CHECK(back.dimension() == ctx.dimension());
  CHECK(back.selfCheck());
  for (const auto& g : ctx.generators()) {
    DiagramVector v = DiagramVector::single(g, Rat(3, 7));
    CHECK(back.reduce(v).normal == ctx.reduce(v).normal);
  }
  CHECK_THROWS_AS(QuotientContext::readText("garbage\n"), InputError);
}

TEST_CASE("normal forms are idempotent and linear") {
  QuotientContext ctx({circles(2), 0}, 2, withKinds({RelationKind::STU}));
  const auto& gens = ctx.generators();
  DiagramVector v;
  for (size_t i = 0; i < gens.size(); ++i)
    v.add(gens[i], Rat((long)i + 1, 3));
  DiagramVector n = ctx.reduce(v).normal;
  CHECK(ctx.reduce(n).normal == n);
  DiagramVector w = DiagramVector::single(gens.front(), Rat(-5, 2));
  CHECK(ctx.reduce(v + w).normal == n + ctx.reduce(w).normal);
  CHECK(ctx.reduce(v - v).normal.zero());
}
