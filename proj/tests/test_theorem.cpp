#include <doctest.h>

#include "helpers.hpp"
#include "jd/maps.hpp"
#include "jd/theorem.hpp"

using namespace jd;

TEST_CASE("permutation tables") {
  CHECK(allPermutations(1) == std::vector<std::vector<int>>{{1}});
  CHECK(allPermutations(2) == std::vector<std::vector<int>>{{1, 2}, {2, 1}});
  CHECK(allPermutations(3).size() == 6);
}

TEST_CASE("caterpillar trees") {
  CHECK(tree(2, {1}).enc == canonicalize(jdtest::tripod(1, 2, 3)).canon.enc);
  for (int n = 2; n <= 4; ++n) {
    std::vector<int> id;
    for (int i = 1; i < n; ++i) id.push_back(i);
    Diagram d = treeRaw(n, id);
    CHECK(d.degree() == n);
    CHECK(d.colors == n + 1);
    CHECK(d.legCount() == n + 1);
    std::vector<int> colorsSeen;
    for (const Leg& l : d.legs) colorsSeen.push_back(l.color);
    std::sort(colorsSeen.begin(), colorsSeen.end());
    for (int c = 1; c <= n + 1; ++c) CHECK(colorsSeen[c - 1] == c);
    CHECK(dashedComponents(d).second == 1);
  }
  CHECK_THROWS_AS(treeRaw(1, {}), InputError);
  CHECK_THROWS_AS(treeRaw(3, {1, 1}), InputError);
  CHECK_THROWS_AS(treeRaw(3, {1}), InputError);
}

TEST_CASE("pairing elements are symmetric and equivariant by construction") {
  for (int n : {2, 3}) {
    auto perms = allPermutations(n - 1);
    for (const auto& s : perms)
      for (const auto& t : perms) {
        DiagramVector a = pairingElementRaw(n, s, t);
        CHECK(!a.zero());
        CHECK(a == pairingElementRaw(n, t, s));
        for (const auto& eta : perms) {
          // Extend eta to the n+1 circles, fixing circles n and n+1.
          std::vector<int> ext = eta;
          ext.push_back(n);
          ext.push_back(n + 1);
          std::vector<int> es(n - 1), et(n - 1);
          for (int i = 0; i < n - 1; ++i) {
            es[i] = eta[s[i] - 1];
            et[i] = eta[t[i] - 1];
          }
          CHECK(permuteColors(a, ext) == pairingElementRaw(n, es, et));
        }
      }
  }
}

TEST_CASE("weight system I/O and evaluation") {
  CanonResult ins = insertCircles(roundRobinPlacement(jdtest::theta(), 3));
  WeightSystem w = WeightSystem::dual(2, ins.canon);
  CHECK(w.evaluate(DiagramVector::single(ins.canon, 3)) == 3);
  CHECK(w.evaluate(DiagramVector()) == 0);

  WeightSystem back = WeightSystem::fromJson(w.toJson());
  CHECK(back.toJson() == w.toJson());

  json bad = w.toJson();
  bad["defaultZero"] = false;
  CHECK_THROWS_AS(WeightSystem::fromJson(bad), InputError);
  json offClass = w.toJson();
  offClass["n"] = 3;
  CHECK_THROWS_AS(WeightSystem::fromJson(offClass), InputError);
}

TEST_CASE("weight system validation") {
  // An empty table vanishes everywhere, relations included.
  WeightSystem zero(2, {});
  CHECK_NOTHROW(zero.validate());
  CHECK(zero.evaluate(pairingElementRaw(2, {1}, {1})) == 0);

  // The raw dual of one diagram sees only one term of an STU instance.
  CanonResult ins = insertCircles(roundRobinPlacement(jdtest::theta(), 3));
  WeightSystem dual = WeightSystem::dual(2, ins.canon);
  CHECK_THROWS_AS(dual.validate(), Error);
}

TEST_CASE("quadratic form evaluation") {
  QuadraticForm f;
  f.n = 2;
  f.perms = allPermutations(1);
  f.f = {{Rat(2)}};
  CHECK(quadraticFormEval(f, {Rat(3)}) == 9);
  CHECK(quadraticFormEval(f, {Rat(0)}) == 0);
  CHECK(f.integerEntries());
  CHECK(f.evenDiagonal());
  CHECK_THROWS_AS(quadraticFormEval(f, {Rat(1), Rat(2)}), InputError);

  QuadraticForm g;
  g.n = 3;
  g.perms = allPermutations(2);
  g.f = {{Rat(2), Rat(5)}, {Rat(5), Rat(-4)}};
  CHECK(g.evenDiagonal());
  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Rat> mu = {Rat((int)(rng() % 9) - 4), Rat((int)(rng() % 9) - 4)};
    CHECK(quadraticFormEval(g, mu).get_den() == 1);
  }

  QuadraticForm odd = g;
  odd.f[0][0] = 3;
  CHECK_FALSE(odd.evenDiagonal());
}

TEST_CASE("coefficient symmetry for an arbitrary weight system") {
  CanonResult ins = insertCircles(roundRobinPlacement(jdtest::theta(), 3));
  WeightSystem w = WeightSystem::dual(2, ins.canon);
  CHECK(coefficient(w, {1}, {1}) == coefficient(w, {1}, {1}));
  QuadraticForm f = QuadraticForm::fromWeightSystem(w);
  CHECK(f.f.size() == 1);
  CHECK(f.f[0][0] == coefficient(w, {1}, {1}));
}

TEST_CASE("left inverse of circle insertion") {
  for (int n : {2, 3}) {
    Report rep = verifyLeftInverse(n);
    CHECK(rep.status == "pass");
    CHECK(!rep.witnesses.empty());
    json j = rep.toJson();
    CHECK(j["suite"] == "leftInverse");
    CHECK(j["parameters"]["n"] == n);
    CHECK(j.contains("timings"));
  }
  CHECK_THROWS_AS(verifyLeftInverse(1), InputError);
  CHECK_THROWS_AS(verifyWheelVanishing(3), InputError);
}
