#ifndef JD_TEST_HELPERS_HPP
#define JD_TEST_HELPERS_HPP

#include <random>

#include "jd/canonical.hpp"

namespace jdtest {

using namespace jd;

// Two trivalent vertices joined by three parallel edges, both vertices in
// the reference cyclic order.
inline Diagram theta() {
  Diagram d;
  d.trivalent = 2;
  d.mate = {3, 4, 5, 0, 1, 2};
  return d;
}

inline Diagram thetaTransposed() {
  Diagram d = theta();
  d.mate = {3, 5, 4, 0, 2, 1};
  return d;
}

// One trivalent vertex with a self-loop and a single leg of color 1.
inline Diagram loopWithLeg() {
  Diagram d;
  d.colors = 1;
  d.trivalent = 1;
  Leg l;
  l.color = 1;
  d.legs = {l};
  d.mate = {1, 0, 3, 2};
  return d;
}

inline Diagram chordOnCircle() {
  Diagram d;
  d.skel = circles(1);
  Leg a, b;
  a.component = b.component = 1;
  a.position = 0;
  b.position = 1;
  d.legs = {a, b};
  d.mate = {1, 0};
  return d;
}

inline Diagram tripod(int c1, int c2, int c3) {
  Diagram d;
  d.colors = std::max({c1, c2, c3});
  d.trivalent = 1;
  Leg l1, l2, l3;
  l1.color = c1;
  l2.color = c2;
  l3.color = c3;
  d.legs = {l1, l2, l3};
  d.mate = {3, 4, 5, 0, 1, 2};
  return d;
}

// Relabels vertices/half-edges with tracked cyclic-order swaps; returns the
// relabeled diagram and the AS sign relating it to the input
// (relabeled == sign * input).
inline std::pair<Diagram, int> randomRelabel(const Diagram& d,
                                             std::mt19937& rng) {
  int T = d.trivalent, L = d.legCount();
  std::vector<int> vperm(T);
  for (int i = 0; i < T; ++i) vperm[i] = i;
  std::shuffle(vperm.begin(), vperm.end(), rng);

  int sign = 1;
  std::vector<int> newHalf(d.halfEdges());
  for (int v = 0; v < T; ++v) {
    int rot = (int)(rng() % 3);
    bool flip = rng() % 2 == 0;
    if (flip) sign = -sign;
    for (int s = 0; s < 3; ++s) {
      int ns = flip ? (3 - s) % 3 : s;
      newHalf[3 * v + (s + rot) % 3] = 3 * vperm[v] + ns;
    }
  }

  // Legs keep identity order but positions get rescaled; circles may also
  // be rotated.
  std::vector<int> lperm(L);
  for (int i = 0; i < L; ++i) lperm[i] = i;
  std::shuffle(lperm.begin(), lperm.end(), rng);
  for (int j = 0; j < L; ++j) newHalf[3 * T + j] = 3 * T + lperm[j];

  Diagram out;
  out.skel = d.skel;
  out.colors = d.colors;
  out.trivalent = T;
  out.legs.resize(L);
  for (int j = 0; j < L; ++j) {
    Leg l = d.legs[j];
    l.position = l.position * 7 + 2;  // order-preserving rescale
    out.legs[lperm[j]] = l;
  }
  if (d.skel.kind == SkeletonKind::Circles) {
    for (int c = 1; c <= d.skel.count; ++c) {
      auto on = legsOnComponent(out, c);
      if (on.size() < 2) continue;
      int shift = (int)(rng() % on.size());
      std::vector<int> pos;
      for (int j : on) pos.push_back(out.legs[j].position);
      for (size_t i = 0; i < on.size(); ++i)
        out.legs[on[(i + shift) % on.size()]].position = pos[i];
    }
  }
  out.mate.assign(d.halfEdges(), -1);
  for (int h = 0; h < d.halfEdges(); ++h)
    out.mate[newHalf[h]] = newHalf[d.mate[h]];
  return {out, sign};
}

}  // namespace jdtest

#endif
