#include "jd/relations.hpp"

namespace jd {

const char* relationName(RelationKind k) {
  switch (k) {
    case RelationKind::STU: return "STU";
    case RelationKind::FI: return "FI";
    case RelationKind::AS: return "AS";
    case RelationKind::IHX: return "IHX";
  }
  return "?";
}

RelationKind relationFromName(const std::string& s) {
  if (s == "STU") return RelationKind::STU;
  if (s == "FI") return RelationKind::FI;
  if (s == "AS") return RelationKind::AS;
  if (s == "IHX") return RelationKind::IHX;
  throw InputError("unknown relation kind: " + s);
}

Diagram swapLegs(const Diagram& d, int legA, int legB) {
  Diagram out = d;
  std::swap(out.legs[legA].position, out.legs[legB].position);
  return out;
}

Diagram mergeLegs(const Diagram& d, int legA, int legB) {
  int T = d.trivalent, L = d.legCount();
  if (d.legs[legA].component == 0)
    throw Error("mergeLegs: legs must sit on a skeleton component");
  Diagram out;
  out.skel = d.skel;
  out.colors = d.colors;
  out.trivalent = T + 1;
  std::vector<int> legMap(L, -1);
  for (int j = 0; j < L; ++j) {
    if (j == legA || j == legB) continue;
    legMap[j] = out.legCount();
    out.legs.push_back(d.legs[j]);
  }
  int sLeg = out.legCount();
  out.legs.push_back(d.legs[legA]);  // merged string leg keeps a's position
  int nT = out.trivalent;
  auto remap = [&](int h) {
    return h < 3 * T ? h : 3 * nT + legMap[h - 3 * T];
  };
  out.mate.assign(out.halfEdges(), -1);
  int ha = 3 * T + legA, hb = 3 * T + legB;
  for (int h = 0; h < 3 * T + L; ++h) {
    if (h == ha || h == hb) continue;
    int m = d.mate[h];
    if (m == ha || m == hb) continue;
    out.mate[remap(h)] = remap(m);
  }
  // New vertex w = T, cyclic order (string, edge-of-a, edge-of-b).
  int hs = 3 * nT + sLeg;
  out.mate[3 * T] = hs;
  out.mate[hs] = 3 * T;
  int pa = d.mate[ha], pb = d.mate[hb];
  if (pa == hb) {
    // The legs were a chord; merging curls it into a self-loop.
    out.mate[3 * T + 1] = 3 * T + 2;
    out.mate[3 * T + 2] = 3 * T + 1;
  } else {
    out.mate[3 * T + 1] = remap(pa);
    out.mate[remap(pa)] = 3 * T + 1;
    out.mate[3 * T + 2] = remap(pb);
    out.mate[remap(pb)] = 3 * T + 2;
  }
  return out;
}

Diagram unmergeLeg(const Diagram& d, int leg) {
  int T = d.trivalent, L = d.legCount();
  int h = 3 * T + leg;
  int p = d.mate[h];
  if (p >= 3 * T) throw Error("unmergeLeg: leg edge does not end at a vertex");
  int w = p / 3, si = p % 3;
  int sa = 3 * w + (si + 1) % 3, sb = 3 * w + (si + 2) % 3;
  int ea = d.mate[sa], eb = d.mate[sb];
  Diagram out;
  out.skel = d.skel;
  out.colors = d.colors;
  out.trivalent = T - 1;
  // Double the positions on the leg's component to open a slot right after it.
  int comp = d.legs[leg].component;
  std::vector<int> legMap(L, -1);
  for (int j = 0; j < L; ++j) {
    if (j == leg) continue;
    Leg l = d.legs[j];
    if (l.component == comp) l.position *= 2;
    legMap[j] = out.legCount();
    out.legs.push_back(l);
  }
  Leg a = d.legs[leg], b = d.legs[leg];
  a.position *= 2;
  b.position = a.position + 1;
  int ia = out.legCount();
  out.legs.push_back(a);
  int ib = out.legCount();
  out.legs.push_back(b);
  int nT = out.trivalent;
  auto remap = [&](int x) {
    if (x < 3 * T) return 3 * (x / 3 < w ? x / 3 : x / 3 - 1) + x % 3;
    return 3 * nT + legMap[x - 3 * T];
  };
  out.mate.assign(out.halfEdges(), -1);
  for (int x = 0; x < 3 * T + L; ++x) {
    int m = d.mate[x];
    if ((x < 3 * T && x / 3 == w) || (m < 3 * T && m / 3 == w)) continue;
    out.mate[remap(x)] = remap(m);
  }
  int hA = 3 * nT + ia, hB = 3 * nT + ib;
  if (ea == sb) {
    out.mate[hA] = hB;
    out.mate[hB] = hA;
  } else {
    out.mate[hA] = remap(ea);
    out.mate[remap(ea)] = hA;
    out.mate[hB] = remap(eb);
    out.mate[remap(eb)] = hB;
  }
  return out;
}

Diagram reverseVertex(const Diagram& d, int v) {
  Diagram out = d;
  int x = 3 * v + 1, y = 3 * v + 2;
  int mx = out.mate[x], my = out.mate[y];
  if (mx == y) return out;  // self-loop: the flip is an automorphism
  out.mate[x] = my;
  out.mate[my] = x;
  out.mate[y] = mx;
  out.mate[mx] = y;
  return out;
}

// Exchange the far attachments of two vertex slots (the local change behind
// the second and third IHX terms). When the slots are joined to each other
// the exchange is the identity.
static Diagram swapFarEnds(const Diagram& d, int x, int y) {
  Diagram out = d;
  int px = out.mate[x], py = out.mate[y];
  if (px == y) return out;
  out.mate[x] = py;
  out.mate[py] = x;
  out.mate[y] = px;
  out.mate[px] = y;
  return out;
}

bool hasIsolatedChord(const Diagram& d) {
  int T = d.trivalent;
  if (d.skel.kind == SkeletonKind::Empty) return false;
  for (int c = 1; c <= d.skel.count; ++c) {
    auto ord = legsOnComponent(d, c);
    int k = (int)ord.size();
    if (k < 2) continue;
    int pairs = d.skel.kind == SkeletonKind::Circles ? k : k - 1;
    if (d.skel.kind == SkeletonKind::Circles && k == 2) pairs = 1;
    for (int i = 0; i < pairs; ++i) {
      int a = ord[i], b = ord[(i + 1) % k];
      if (d.mate[3 * T + a] == 3 * T + b) return true;
    }
  }
  return false;
}

static void stuInstances(const Diagram& d, std::vector<DiagramVector>& out,
                         bool withUnmerge) {
  int T = d.trivalent;
  for (int c = 1; c <= d.skel.count; ++c) {
    auto ord = legsOnComponent(d, c);
    int k = (int)ord.size();
    if (k < 2) continue;
    int pairs = d.skel.kind == SkeletonKind::Circles ? k : k - 1;
    for (int i = 0; i < pairs; ++i) {
      int a = ord[i], b = ord[(i + 1) % k];
      DiagramVector r;
      r.addRaw(d, 1);
      r.addRaw(swapLegs(d, a, b), -1);
      r.addRaw(mergeLegs(d, a, b), -1);
      if (!r.zero()) out.push_back(std::move(r));
    }
  }
  if (!withUnmerge) return;
  for (int j = 0; j < d.legCount(); ++j) {
    if (d.mate[3 * T + j] >= 3 * T) continue;
    Diagram up = unmergeLeg(d, j);
    int a = up.legCount() - 2, b = up.legCount() - 1;
    DiagramVector r;
    r.addRaw(up, 1);
    r.addRaw(swapLegs(up, a, b), -1);
    r.addRaw(d, -1);
    if (!r.zero()) out.push_back(std::move(r));
  }
}

static void ihxInstances(const Diagram& d, std::vector<DiagramVector>& out) {
  int T = d.trivalent;
  for (int h1 = 0; h1 < 3 * T; ++h1) {
    int h2 = d.mate[h1];
    if (h2 < h1 || h2 >= 3 * T) continue;
    int u = h1 / 3, v = h2 / 3;
    if (u == v) continue;
    int bslot = 3 * u + (h1 % 3 + 2) % 3;
    int cslot = 3 * v + (h2 % 3 + 1) % 3;
    int dslot = 3 * v + (h2 % 3 + 2) % 3;
    DiagramVector r;
    r.addRaw(d, 1);
    r.addRaw(swapFarEnds(d, bslot, cslot), -1);
    r.addRaw(swapFarEnds(d, bslot, dslot), -1);
    if (!r.zero()) out.push_back(std::move(r));
  }
}

std::vector<DiagramVector> relationInstancesFor(const CanonicalDiagram& d,
                                                RelationKind kind,
                                                bool withUnmerge) {
  const Diagram& rep = d.rep;
  std::vector<DiagramVector> out;
  switch (kind) {
    case RelationKind::STU:
      if (rep.skel.kind == SkeletonKind::Empty)
        throw Error("STU requires a skeleton");
      stuInstances(rep, out, withUnmerge);
      break;
    case RelationKind::FI:
      if (hasIsolatedChord(rep)) {
        DiagramVector r;
        r.addRaw(rep, 1);
        if (!r.zero()) out.push_back(std::move(r));
      }
      break;
    case RelationKind::AS:
      for (int v = 0; v < rep.trivalent; ++v) {
        DiagramVector r;
        r.addRaw(rep, 1);
        r.addRaw(reverseVertex(rep, v), 1);
        if (!r.zero()) out.push_back(std::move(r));
      }
      break;
    case RelationKind::IHX:
      ihxInstances(rep, out);
      break;
  }
  return out;
}

}  // namespace jd
