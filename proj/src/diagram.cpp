#include "jd/diagram.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace jd {

std::string skeletonName(const Skeleton& s) {
  switch (s.kind) {
    case SkeletonKind::Empty:
      return "empty";
    case SkeletonKind::Circles:
      return "C" + std::to_string(s.count);
    case SkeletonKind::Intervals:
      return "I" + std::to_string(s.count);
  }
  return "?";
}

void validate(const Diagram& d) {
  if (d.skel.kind == SkeletonKind::Empty) {
    if (d.skel.count != 0)
      throw ValidationError("empty skeleton must have count 0");
  } else if (d.skel.count < 1) {
    throw ValidationError("nonempty skeleton must have count >= 1");
  }
  if (d.colors > 0 && d.skel.kind != SkeletonKind::Empty)
    throw ValidationError("colored legs require the empty skeleton");
  if (d.trivalent < 0) throw ValidationError("negative trivalent count");

  const int H = d.halfEdges();
  if ((int)d.mate.size() != H)
    throw ValidationError("matching has " + std::to_string(d.mate.size()) +
                          " entries, expected " + std::to_string(H));
  if ((d.trivalent + d.legCount()) % 2 != 0)
    throw ValidationError("odd vertex count (degree must be an integer)");

  for (int h = 0; h < H; ++h) {
    int p = d.mate[h];
    if (p < 0 || p >= H)
      throw ValidationError("half-edge " + std::to_string(h) +
                            " matched out of range");
    if (p == h)
      throw ValidationError("half-edge " + std::to_string(h) +
                            " matched to itself");
    if (d.mate[p] != h)
      throw ValidationError("half-edge " + std::to_string(h) +
                            " not matched symmetrically");
  }

  std::map<int, std::set<int>> positions;
  for (int j = 0; j < d.legCount(); ++j) {
    const Leg& l = d.legs[j];
    if (d.skel.kind == SkeletonKind::Empty) {
      if (d.colors == 0)
        throw ValidationError("leg " + std::to_string(j) +
                              " present on a colorless empty skeleton");
      if (l.color < 1 || l.color > d.colors)
        throw ValidationError("leg " + std::to_string(j) + " has color " +
                              std::to_string(l.color) + " outside 1.." +
                              std::to_string(d.colors));
    } else {
      if (l.component < 1 || l.component > d.skel.count)
        throw ValidationError("leg " + std::to_string(j) + " on component " +
                              std::to_string(l.component) + " outside 1.." +
                              std::to_string(d.skel.count));
      if (!positions[l.component].insert(l.position).second)
        throw ValidationError("duplicate position " +
                              std::to_string(l.position) + " on component " +
                              std::to_string(l.component));
    }
  }

  // Every dashed component must reach a univalent vertex, except in the
  // legless trivalent case (empty skeleton, no colors).
  if (d.skel.kind != SkeletonKind::Empty || d.colors > 0) {
    auto [comp, n] = dashedComponents(d);
    std::vector<char> hasLeg(n, 0);
    for (int j = 0; j < d.legCount(); ++j) hasLeg[comp[3 * d.trivalent + j]] = 1;
    for (int c = 0; c < n; ++c)
      if (!hasLeg[c])
        throw ValidationError(
            "dashed component without a univalent vertex (component " +
            std::to_string(c) + ")");
  }
}

std::vector<int> legsOnComponent(const Diagram& d, int c) {
  std::vector<int> out;
  for (int j = 0; j < d.legCount(); ++j)
    if (d.legs[j].component == c) out.push_back(j);
  std::sort(out.begin(), out.end(), [&](int a, int b) {
    return d.legs[a].position < d.legs[b].position;
  });
  return out;
}

std::pair<std::vector<int>, int> dashedComponents(const Diagram& d) {
  const int H = d.halfEdges();
  std::vector<int> comp(H, -1);
  int n = 0;
  for (int h0 = 0; h0 < H; ++h0) {
    if (comp[h0] != -1) continue;
    std::vector<int> stack{h0};
    comp[h0] = n;
    while (!stack.empty()) {
      int h = stack.back();
      stack.pop_back();
      auto push = [&](int x) {
        if (comp[x] == -1) {
          comp[x] = n;
          stack.push_back(x);
        }
      };
      push(d.mate[h]);
      if (h < 3 * d.trivalent) {
        int v = h / 3;
        push(3 * v);
        push(3 * v + 1);
        push(3 * v + 2);
      }
    }
    ++n;
  }
  return {comp, n};
}

}  // namespace jd
