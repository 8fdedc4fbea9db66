#include "jd/maps.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>

#include "jd/relations.hpp"

namespace jd {

namespace {

// Side-by-side union with fresh half-edge ids; skeleton/colors from `a`.
Diagram combinePair(const Diagram& a, const Diagram& b) {
  Diagram d;
  d.skel = a.skel;
  d.colors = a.colors;
  d.trivalent = a.trivalent + b.trivalent;
  d.legs = a.legs;
  d.legs.insert(d.legs.end(), b.legs.begin(), b.legs.end());
  d.mate.assign(d.halfEdges(), -1);
  int T = d.trivalent;
  auto remapA = [&](int h) {
    return h < 3 * a.trivalent ? h : h - 3 * a.trivalent + 3 * T;
  };
  auto remapB = [&](int h) {
    return h < 3 * b.trivalent
               ? h + 3 * a.trivalent
               : h - 3 * b.trivalent + 3 * T + a.legCount();
  };
  for (int h = 0; h < a.halfEdges(); ++h)
    d.mate[remapA(h)] = remapA(a.mate[h]);
  for (int h = 0; h < b.halfEdges(); ++h)
    d.mate[remapB(h)] = remapB(b.mate[h]);
  return d;
}

template <typename F>
DiagramVector bilinear(const DiagramVector& a, const DiagramVector& b, F f) {
  DiagramVector out;
  for (const auto& [ea, ta] : a.terms())
    for (const auto& [eb, tb] : b.terms())
      out.add(f(ta.first, tb.first), ta.second * tb.second);
  return out;
}

}  // namespace

Diagram disjointUnionRaw(const Diagram& a, const Diagram& b) {
  if (a.skel.kind != SkeletonKind::Empty ||
      b.skel.kind != SkeletonKind::Empty || a.colors != b.colors)
    throw Error("disjointUnion needs two open diagrams over one color set");
  return combinePair(a, b);
}

DiagramVector disjointUnion(const DiagramVector& a, const DiagramVector& b) {
  return bilinear(a, b, [](const CanonicalDiagram& x, const CanonicalDiagram& y) {
    DiagramVector t;
    t.addRaw(disjointUnionRaw(x.rep, y.rep), 1);
    return t;
  });
}

DiagramVector stack(const DiagramVector& a, const DiagramVector& b) {
  return bilinear(a, b, [](const CanonicalDiagram& x, const CanonicalDiagram& y) {
    const Diagram &dx = x.rep, &dy = y.rep;
    if (dx.skel.kind != SkeletonKind::Intervals || dx.skel != dy.skel)
      throw Error("stack needs a common interval skeleton");
    Diagram d = combinePair(dx, dy);
    std::vector<int> shift(dx.skel.count + 1, 0);
    for (const Leg& l : dx.legs)
      shift[l.component] = std::max(shift[l.component], l.position + 1);
    for (int j = dx.legCount(); j < d.legCount(); ++j)
      d.legs[j].position += shift[d.legs[j].component];
    DiagramVector t;
    t.addRaw(d, 1);
    return t;
  });
}

Diagram permuteColorsRaw(const Diagram& d, const std::vector<int>& eta) {
  int m = d.open() ? d.colors : d.skel.count;
  if ((int)eta.size() != m) throw InputError("permutation size mismatch");
  std::vector<char> seen(m + 1, 0);
  for (int v : eta) {
    if (v < 1 || v > m || seen[v]) throw InputError("not a permutation");
    seen[v] = 1;
  }
  Diagram out = d;
  for (Leg& l : out.legs) {
    if (d.open())
      l.color = eta[l.color - 1];
    else if (m > 0)
      l.component = eta[l.component - 1];
  }
  return out;
}

DiagramVector permuteColors(const DiagramVector& x,
                            const std::vector<int>& eta) {
  DiagramVector out;
  for (const auto& [enc, tc] : x.terms())
    out.addRaw(permuteColorsRaw(tc.first.rep, eta), tc.second);
  return out;
}

// ---- chi ------------------------------------------------------------------

static void chiTerm(const Diagram& d, int m, const Rat& scale,
                    DiagramVector& out) {
  if (!d.open() && d.legCount() > 0)
    throw Error("chi expects open diagrams");
  if (d.colors > m) throw InputError("diagram color exceeds target strings");
  std::vector<std::vector<int>> byColor(m + 1);
  for (int j = 0; j < d.legCount(); ++j) byColor[d.legs[j].color].push_back(j);
  mpz_class orders = 1;
  for (int c = 1; c <= m; ++c)
    for (size_t i = 2; i <= byColor[c].size(); ++i) orders *= (long)i;
  Rat coeff = scale / Rat(orders);
  Diagram base = d;
  base.skel = intervals(m);
  base.colors = 0;
  std::function<void(int)> rec = [&](int c) {
    if (c > m) {
      out.addRaw(base, coeff);
      return;
    }
    std::vector<int>& legs = byColor[c];
    std::sort(legs.begin(), legs.end());
    do {
      for (size_t i = 0; i < legs.size(); ++i) {
        base.legs[legs[i]].component = c;
        base.legs[legs[i]].color = 0;
        base.legs[legs[i]].position = (int)i;
      }
      rec(c + 1);
    } while (std::next_permutation(legs.begin(), legs.end()));
  };
  rec(1);
}

DiagramVector chi(const DiagramVector& x, int m) {
  DiagramVector out;
  for (const auto& [enc, tc] : x.terms())
    chiTerm(tc.first.rep, m, tc.second, out);
  return out;
}

// ---- pbwInverse -----------------------------------------------------------

namespace {

// Forget the leg order: interval diagram -> open diagram, color = component.
Diagram forgetOrder(const Diagram& d) {
  Diagram o = d;
  o.colors = d.skel.count;
  o.skel = emptySkeleton();
  for (Leg& l : o.legs) {
    l.color = l.component;
    l.component = 0;
    l.position = 0;
  }
  return o;
}

std::map<std::string, DiagramVector> pbwMemo;
std::mutex pbwMemoMutex;

DiagramVector pbwTerm(const CanonicalDiagram& y);

DiagramVector pbwVector(const DiagramVector& v) {
  DiagramVector out;
  for (const auto& [enc, tc] : v.terms())
    out.add(pbwTerm(tc.first), tc.second);
  return out;
}

DiagramVector pbwTerm(const CanonicalDiagram& y) {
  {
    std::scoped_lock lock(pbwMemoMutex);
    auto it = pbwMemo.find(y.enc);
    if (it != pbwMemo.end()) return it->second;
  }
  const Diagram& d = y.rep;
  if (d.skel.kind != SkeletonKind::Intervals)
    throw Error("pbwInverse expects an interval skeleton");
  int m = d.skel.count;
  std::vector<std::vector<int>> ord(m + 1);
  mpz_class N = 1;
  bool trivial = true;
  for (int c = 1; c <= m; ++c) {
    ord[c] = legsOnComponent(d, c);
    if (ord[c].size() > 1) trivial = false;
    for (size_t i = 2; i <= ord[c].size(); ++i) N *= (long)i;
  }
  DiagramVector result;
  result.addRaw(forgetOrder(d), 1);
  if (!trivial) {
    // Modulo STU, chi(forgetOrder(y)) = y + corr where corr collects the
    // merge terms along each bubble-sort reordering path; every corr term
    // has one leg fewer. Hence p(y) = forgetOrder(y) - p(corr).
    DiagramVector corr;
    Rat step = Rat(-1) / Rat(N);
    std::vector<std::vector<int>> target = ord;
    std::function<void(int)> rec = [&](int c) {
      if (c > m) {
        Diagram cur = d;
        for (int cc = 1; cc <= m; ++cc) {
          std::vector<int> seq = ord[cc];
          for (size_t pos = 0; pos < target[cc].size(); ++pos) {
            size_t j = pos;
            while (seq[j] != target[cc][pos]) ++j;
            for (; j > pos; --j) {
              corr.addRaw(mergeLegs(cur, seq[j - 1], seq[j]), step);
              cur = swapLegs(cur, seq[j - 1], seq[j]);
              std::swap(seq[j - 1], seq[j]);
            }
          }
        }
        return;
      }
      std::sort(target[c].begin(), target[c].end());
      do {
        rec(c + 1);
      } while (std::next_permutation(target[c].begin(), target[c].end()));
    };
    rec(1);
    result -= pbwVector(corr);
  }
  std::scoped_lock lock(pbwMemoMutex);
  return pbwMemo.emplace(y.enc, std::move(result)).first->second;
}

}  // namespace

DiagramVector pbwInverse(const DiagramVector& y) { return pbwVector(y); }

// ---- skeleton plumbing ----------------------------------------------------

DiagramVector close(const DiagramVector& y) {
  DiagramVector out;
  for (const auto& [enc, tc] : y.terms()) {
    if (tc.first.rep.skel.kind != SkeletonKind::Intervals)
      throw Error("close expects an interval skeleton");
    Diagram d = tc.first.rep;
    d.skel.kind = SkeletonKind::Circles;
    out.addRaw(d, tc.second);
  }
  return out;
}

Diagram cutCirclesRaw(const Diagram& d, const std::vector<int>& rot) {
  if (d.skel.kind != SkeletonKind::Circles)
    throw Error("cutCircles expects a circle skeleton");
  Diagram out = d;
  out.skel.kind = SkeletonKind::Intervals;
  for (int c = 1; c <= d.skel.count; ++c) {
    auto ord = legsOnComponent(d, c);
    int k = (int)ord.size();
    if (k == 0) continue;
    int start = c - 1 < (int)rot.size() ? ((rot[c - 1] % k) + k) % k : 0;
    for (int i = 0; i < k; ++i)
      out.legs[ord[(start + i) % k]].position = i;
  }
  return out;
}

DiagramVector cutCircles(const DiagramVector& y, const std::vector<int>& rot) {
  DiagramVector out;
  for (const auto& [enc, tc] : y.terms())
    out.addRaw(cutCirclesRaw(tc.first.rep, rot), tc.second);
  return out;
}

DiagramVector deleteString(const DiagramVector& y, int i) {
  DiagramVector out;
  for (const auto& [enc, tc] : y.terms()) {
    const Diagram& d = tc.first.rep;
    if (d.skel.kind != SkeletonKind::Intervals)
      throw Error("deleteString expects an interval skeleton");
    if (i < 1 || i > d.skel.count)
      throw InputError("deleteString: component out of range");
    if (!legsOnComponent(d, i).empty()) continue;
    Diagram r = d;
    r.skel.count -= 1;
    if (r.skel.count == 0) r.skel = emptySkeleton();
    for (Leg& l : r.legs)
      if (l.component > i) l.component -= 1;
    out.addRaw(r, tc.second);
  }
  return out;
}

DiagramVector cable(const DiagramVector& y, int m) {
  DiagramVector out;
  for (const auto& [enc, tc] : y.terms()) {
    const Diagram& d = tc.first.rep;
    if (d.skel.kind != SkeletonKind::Intervals || d.skel.count != 1)
      throw Error("cable expects a single interval");
    Diagram r = d;
    r.skel.count = m;
    int L = d.legCount();
    std::function<void(int)> rec = [&](int j) {
      if (j == L) {
        out.addRaw(r, tc.second);
        return;
      }
      for (int s = 1; s <= m; ++s) {
        r.legs[j].component = s;
        rec(j + 1);
      }
    };
    rec(0);
  }
  return out;
}

// ---- wheels ---------------------------------------------------------------

static Diagram wheelRaw(int legs, bool open) {
  if (legs < 2 || legs % 2 != 0)
    throw InputError("wheel needs an even leg count >= 2");
  Diagram d;
  d.trivalent = legs;
  if (open) {
    d.colors = 1;
  } else {
    d.skel = intervals(1);
  }
  d.mate.assign(4 * legs, -1);
  for (int v = 0; v < legs; ++v) {
    int leg = 3 * legs + v;
    d.mate[3 * v] = leg;
    d.mate[leg] = 3 * v;
    d.mate[3 * v + 1] = 3 * ((v + 1) % legs) + 2;
    d.mate[3 * ((v + 1) % legs) + 2] = 3 * v + 1;
    Leg l;
    if (open) {
      l.color = 1;
    } else {
      l.component = 1;
      l.position = v;
    }
    d.legs.push_back(l);
  }
  return d;
}

CanonicalDiagram wheel(int legs) {
  auto r = canonicalize(wheelRaw(legs, false));
  if (r.sign == 0) throw Error("wheel is unexpectedly degenerate");
  return r.canon;
}

CanonicalDiagram wheelOpen(int legs) {
  auto r = canonicalize(wheelRaw(legs, true));
  if (r.sign == 0) throw Error("wheel is unexpectedly degenerate");
  return r.canon;
}

// ---- circle insertion -----------------------------------------------------

std::vector<std::pair<int, int>> edgeList(const Diagram& d) {
  std::vector<std::pair<int, int>> out;
  for (int h = 0; h < d.halfEdges(); ++h)
    if (d.mate[h] > h) out.emplace_back(h, d.mate[h]);
  return out;
}

Placement roundRobinPlacement(const Diagram& gamma, int circles) {
  if (gamma.legCount() != 0 || gamma.skel.kind != SkeletonKind::Empty)
    throw Error("placements are defined for legless diagrams");
  Placement pl;
  pl.gamma = gamma;
  size_t edges = edgeList(gamma).size();
  if (edges == 0) throw Error("placement needs a diagram with edges");
  pl.circlesOnEdge.resize(edges);
  for (int c = 1; c <= circles; ++c)
    pl.circlesOnEdge[(c - 1) % edges].push_back(c);
  return pl;
}

CanonResult insertCircles(const Placement& pl) {
  const Diagram& g = pl.gamma;
  validate(g);
  if (g.legCount() != 0 || g.skel.kind != SkeletonKind::Empty ||
      g.colors != 0 || g.trivalent == 0)
    throw Error("insertCircles expects a trivalent legless diagram");
  if (dashedComponents(g).second != 1)
    throw Error("insertCircles is only defined for connected diagrams");
  auto edges = edgeList(g);
  if (pl.circlesOnEdge.size() != edges.size())
    throw InputError("placement does not cover the edge list");
  int m = 0;
  std::vector<char> seen(1, 0);
  for (const auto& lst : pl.circlesOnEdge)
    for (int c : lst) {
      m = std::max(m, c);
      if (c >= (int)seen.size()) seen.resize(c + 1, 0);
      if (c < 1 || seen[c]) throw InputError("circle ids must be 1..m, once each");
      seen[c] = 1;
    }
  for (int c = 1; c <= m; ++c)
    if (!seen[c]) throw InputError("circle ids must be 1..m, once each");
  if (m == 0) throw InputError("placement carries no circles");

  int T = g.trivalent;
  Diagram d;
  d.skel = circles(m);
  d.trivalent = T;
  d.legs.resize(2 * m);
  d.mate.assign(3 * T + 2 * m, -1);
  for (int c = 1; c <= m; ++c) {
    d.legs[2 * (c - 1)] = {c, 0, 0};
    d.legs[2 * (c - 1) + 1] = {c, 1, 0};
  }
  auto inLeg = [&](int c) { return 3 * T + 2 * (c - 1); };
  auto outLeg = [&](int c) { return 3 * T + 2 * (c - 1) + 1; };
  for (size_t e = 0; e < edges.size(); ++e) {
    auto [h1, h2] = edges[e];
    const std::vector<int>& lst = pl.circlesOnEdge[e];
    if (lst.empty()) {
      d.mate[h1] = h2;
      d.mate[h2] = h1;
      continue;
    }
    int prev = h1;
    for (int c : lst) {
      d.mate[prev] = inLeg(c);
      d.mate[inLeg(c)] = prev;
      prev = outLeg(c);
    }
    d.mate[prev] = h2;
    d.mate[h2] = prev;
  }
  return canonicalize(d);
}

// ---- joining and projection ----------------------------------------------

DiagramVector joinPairs(const DiagramVector& x, int n) {
  int m = n + 1;
  DiagramVector out;
  for (const auto& [enc, tc] : x.terms()) {
    const Diagram& d = tc.first.rep;
    if (!d.open() && d.legCount() > 0)
      throw Error("joinPairs expects open diagrams");
    std::vector<std::vector<int>> byColor(m + 1);
    bool usable = d.legCount() == 2 * m;
    for (int j = 0; usable && j < d.legCount(); ++j) {
      int c = d.legs[j].color;
      if (c < 1 || c > m)
        usable = false;
      else
        byColor[c].push_back(j);
    }
    for (int c = 1; usable && c <= m; ++c)
      if (byColor[c].size() != 2) usable = false;
    if (!usable) continue;

    int T = d.trivalent;
    auto partner = [&](int leg) {
      const auto& pair = byColor[d.legs[leg].color];
      return pair[0] == leg ? pair[1] : pair[0];
    };
    Diagram r;
    r.trivalent = T;
    r.mate.assign(3 * T, -1);
    for (int h = 0; h < 3 * T; ++h) {
      if (r.mate[h] != -1) continue;
      int x2 = d.mate[h];
      while (x2 >= 3 * T) x2 = d.mate[3 * T + partner(x2 - 3 * T)];
      r.mate[h] = x2;
      r.mate[x2] = h;
    }
    // Any leg chain not consumed by the vertex walk closes a free loop; the
    // term is set to zero in that case.
    std::vector<char> used(d.legCount(), 0);
    for (int h = 0; h < 3 * T; ++h) {
      int x2 = d.mate[h];
      while (x2 >= 3 * T) {
        used[x2 - 3 * T] = 1;
        int p = partner(x2 - 3 * T);
        used[p] = 1;
        x2 = d.mate[3 * T + p];
      }
    }
    bool freeLoop = false;
    for (int j = 0; j < d.legCount(); ++j)
      if (!used[j]) freeLoop = true;
    if (freeLoop) continue;
    out.addRaw(r, tc.second);
  }
  return out;
}

DiagramVector projectConnected(const DiagramVector& x) {
  DiagramVector out;
  for (const auto& [enc, tc] : x.terms()) {
    const Diagram& d = tc.first.rep;
    if (d.legCount() > 0) throw Error("projectConnected expects legless input");
    if (dashedComponents(d).second != 1) continue;
    out.add(tc.first, tc.second);
  }
  return out;
}

// ---- exp/log for disjoint union -------------------------------------------

namespace {

DiagramVector unitVector(int colors) {
  Diagram e;
  e.colors = colors;
  DiagramVector v;
  v.addRaw(e, 1);
  return v;
}

GradedVector gradedMul(const GradedVector& a, const GradedVector& b,
                       int bound) {
  GradedVector out;
  out.bound = bound;
  for (const auto& [i, ai] : a.parts)
    for (const auto& [j, bj] : b.parts)
      if (i + j <= bound) out.add(i + j, disjointUnion(ai, bj));
  return out;
}

bool gradedZero(const GradedVector& g) {
  for (const auto& [i, gi] : g.parts)
    if (!gi.zero()) return false;
  return true;
}

}  // namespace

GradedVector expUnion(const GradedVector& P, int colors, int bound) {
  if (!P.part(0).zero())
    throw InputError("expUnion input must have no degree-0 part");
  GradedVector result, power;
  result.bound = power.bound = bound;
  result.add(0, unitVector(colors));
  power.add(0, unitVector(colors));
  for (int k = 1; k <= bound; ++k) {
    power = gradedMul(power, P, bound);
    if (gradedZero(power)) break;
    for (auto& [i, pi] : power.parts) pi *= Rat(1, k);
    for (const auto& [i, pi] : power.parts) result.add(i, pi);
  }
  result.prune();
  return result;
}

GradedVector logUnion(const GradedVector& G, int colors, int bound) {
  DiagramVector unit = unitVector(colors);
  if (!(G.part(0) == unit))
    throw InputError("logUnion input must have degree-0 part 1");
  GradedVector X = G;
  X.bound = bound;
  X.add(0, unit, -1);
  X.prune();
  GradedVector result, power;
  result.bound = power.bound = bound;
  power.add(0, unitVector(colors));
  for (int k = 1; k <= bound; ++k) {
    power = gradedMul(power, X, bound);
    if (gradedZero(power)) break;
    Rat c = Rat(k % 2 == 1 ? 1 : -1, k);
    for (const auto& [i, pi] : power.parts) result.add(i, pi, c);
  }
  result.prune();
  return result;
}

}  // namespace jd
