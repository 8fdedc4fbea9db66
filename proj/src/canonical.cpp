#include "jd/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <sstream>

namespace jd {

namespace {

// Depth-first search over the symmetry choices: circle starting points,
// same-color leg orders, per-vertex entry slot and orientation, roots for
// legless components. Keeps the lexicographically minimal integer code.
struct Canonicalizer {
  const Diagram& d;
  int T, L, H;
  bool onSkeleton;  // legs attach to skeleton components
  bool isCircles;

  std::vector<std::vector<int>> groups;  // per component/color, input leg ids
  std::vector<int> groupBase;            // canonical position of group start
  std::vector<int> groupOf;              // canonical position -> group

  std::vector<int> vnew, ventry, vorient;  // per input vertex, -1 = unset
  std::vector<int> legAt;                  // canonical pos -> input leg
  std::vector<int> legPos;                 // input leg -> canonical pos
  std::vector<char> legUsed;
  int labeled = 0;

  std::vector<int> bestCode;
  bool haveBest = false;
  std::set<int> bestSigns;
  std::vector<int> bestNewId;  // input half-edge -> new id
  std::vector<int> bestLegAt;

  std::vector<int> code;   // scratch
  std::vector<int> newId;  // scratch

  explicit Canonicalizer(const Diagram& diag) : d(diag) {
    T = d.trivalent;
    L = d.legCount();
    H = d.halfEdges();
    onSkeleton = d.skel.kind != SkeletonKind::Empty;
    isCircles = d.skel.kind == SkeletonKind::Circles;
    vnew.assign(T, -1);
    ventry.assign(T, -1);
    vorient.assign(T, -1);
    legAt.assign(L, -1);
    legPos.assign(L, -1);
    legUsed.assign(L, 0);

    int nGroups = onSkeleton ? d.skel.count : d.colors;
    groups.resize(nGroups);
    if (onSkeleton) {
      for (int c = 1; c <= nGroups; ++c) groups[c - 1] = legsOnComponent(d, c);
    } else {
      for (int j = 0; j < L; ++j) groups[d.legs[j].color - 1].push_back(j);
    }
    groupBase.assign(nGroups, 0);
    groupOf.assign(L, 0);
    int base = 0;
    for (int g = 0; g < nGroups; ++g) {
      groupBase[g] = base;
      for (int i = 0; i < (int)groups[g].size(); ++i) groupOf[base + i] = g;
      base += (int)groups[g].size();
    }

    // Intervals: leg order is rigid, assign up front.
    if (d.skel.kind == SkeletonKind::Intervals) {
      for (int g = 0; g < nGroups; ++g)
        for (int i = 0; i < (int)groups[g].size(); ++i)
          placeLeg(groupBase[g] + i, groups[g][i]);
    }
  }

  void placeLeg(int pos, int leg) {
    legAt[pos] = leg;
    legPos[leg] = pos;
    legUsed[leg] = 1;
  }
  void unplaceLeg(int pos) {
    int leg = legAt[pos];
    legAt[pos] = -1;
    legPos[leg] = -1;
    legUsed[leg] = 0;
  }

  int sourceHalfEdge(int pos, const std::vector<int>& vorder) const {
    if (pos < L) return 3 * T + legAt[pos];
    int idx = pos - L;
    int w = idx / 3, s = idx % 3;
    int v = vorder[w];
    int e = ventry[v], o = vorient[v];
    int si;
    if (s == 0)
      si = e;
    else if (o == 0)
      si = (e + s) % 3;
    else
      si = (e + 3 - s) % 3;
    return 3 * v + si;
  }

  int newIdOf(int h) const {
    if (h >= 3 * T) return 3 * T + legPos[h - 3 * T];
    int v = h / 3, si = h % 3;
    int e = ventry[v], o = vorient[v];
    int ds = (si - e + 3) % 3;
    int slot = ds == 0 ? 0 : (o == 0 ? ds : 3 - ds);
    return 3 * vnew[v] + slot;
  }

  std::vector<int> vorder;  // new label -> input vertex

  void label(int v, int e, int o) {
    vnew[v] = labeled;
    ventry[v] = e;
    vorient[v] = o;
    vorder.push_back(v);
    ++labeled;
  }
  void unlabel(int v) {
    vnew[v] = -1;
    ventry[v] = -1;
    vorient[v] = -1;
    vorder.pop_back();
    --labeled;
  }

  void leaf() {
    newId.assign(H, -1);
    for (int h = 0; h < H; ++h) newId[h] = newIdOf(h);
    code.clear();
    for (int j = 0; j < L; ++j) {
      const Leg& l = d.legs[legAt[j]];
      code.push_back(onSkeleton ? l.component : l.color);
    }
    std::vector<int> nm(H);
    for (int h = 0; h < H; ++h) nm[newId[h]] = newId[d.mate[h]];
    code.insert(code.end(), nm.begin(), nm.end());

    int sign = 1;
    for (int v = 0; v < T; ++v)
      if (vorient[v] == 1) sign = -sign;

    if (!haveBest || code < bestCode) {
      haveBest = true;
      bestCode = code;
      bestSigns = {sign};
      bestNewId = newId;
      bestLegAt = legAt;
    } else if (code == bestCode) {
      bestSigns.insert(sign);
    }
  }

  void visitTarget(int h2, int pos) {
    if (h2 < 3 * T && vnew[h2 / 3] == -1) {
      int v = h2 / 3, si = h2 % 3;
      for (int o = 0; o < 2; ++o) {
        label(v, si, o);
        search(pos + 1);
        unlabel(v);
      }
    } else {
      search(pos + 1);
    }
  }

  void search(int pos) {
    if (pos == L + 3 * T) {
      leaf();
      return;
    }
    if (pos < L) {
      if (legAt[pos] == -1) {
        int g = groupOf[pos];
        const auto& grp = groups[g];
        int k = (int)grp.size();
        if (isCircles) {
          // pos is the group's base; pick the cyclic starting point.
          for (int start = 0; start < k; ++start) {
            for (int i = 0; i < k; ++i)
              placeLeg(groupBase[g] + i, grp[(start + i) % k]);
            search(pos);
            for (int i = 0; i < k; ++i) unplaceLeg(groupBase[g] + i);
          }
        } else {
          // Open diagram: same-color legs are interchangeable.
          for (int l : grp) {
            if (legUsed[l]) continue;
            placeLeg(pos, l);
            search(pos);
            unplaceLeg(pos);
          }
        }
        return;
      }
      visitTarget(d.mate[3 * T + legAt[pos]], pos);
      return;
    }
    int idx = pos - L;
    int w = idx / 3;
    if (w >= labeled) {
      // Remaining vertices are unreachable from anything labeled so far:
      // legless components, pick a root.
      for (int v = 0; v < T; ++v) {
        if (vnew[v] != -1) continue;
        for (int e = 0; e < 3; ++e)
          for (int o = 0; o < 2; ++o) {
            label(v, e, o);
            search(pos);
            unlabel(v);
          }
      }
      return;
    }
    visitTarget(d.mate[sourceHalfEdge(pos, vorder)], pos);
  }
};

std::string encodeCode(const Diagram& d, int L, const std::vector<int>& code) {
  std::ostringstream os;
  switch (d.skel.kind) {
    case SkeletonKind::Empty:
      os << 'E';
      break;
    case SkeletonKind::Circles:
      os << 'C';
      break;
    case SkeletonKind::Intervals:
      os << 'I';
      break;
  }
  os << d.skel.count << '.' << d.colors << '.' << d.trivalent << '.' << L
     << '|';
  for (int j = 0; j < L; ++j) {
    if (j) os << ',';
    os << code[j];
  }
  os << '|';
  for (size_t i = L; i < code.size(); ++i) {
    if (i > (size_t)L) os << ',';
    os << code[i];
  }
  return os.str();
}

}  // namespace

CanonResult canonicalize(const Diagram& d) {
  validate(d);
  Canonicalizer cz(d);
  cz.search(0);

  const int T = cz.T, L = cz.L, H = cz.H;
  Diagram rep;
  rep.skel = d.skel;
  rep.colors = d.colors;
  rep.trivalent = T;
  rep.legs.resize(L);
  std::vector<int> posCounter(std::max(d.skel.count, d.colors) + 1, 0);
  for (int j = 0; j < L; ++j) {
    const Leg& in = d.legs[cz.bestLegAt[j]];
    Leg out;
    if (d.skel.kind != SkeletonKind::Empty) {
      out.component = in.component;
      out.position = posCounter[in.component]++;
    } else {
      out.color = in.color;
    }
    rep.legs[j] = out;
  }
  rep.mate.assign(H, -1);
  for (int h = 0; h < H; ++h)
    rep.mate[cz.bestNewId[h]] = cz.bestNewId[d.mate[h]];

  CanonResult r;
  r.canon.rep = std::move(rep);
  r.canon.enc = encodeCode(d, L, cz.bestCode);
  if (cz.bestSigns.size() == 2)
    r.sign = 0;
  else
    r.sign = *cz.bestSigns.begin();
  return r;
}

CanonicalDiagram decodeEncoding(const std::string& enc) {
  Diagram d;
  size_t p = 0;
  auto fail = [&]() -> void { throw InputError("bad encoding: " + enc); };
  if (p >= enc.size()) fail();
  switch (enc[p]) {
    case 'E':
      d.skel.kind = SkeletonKind::Empty;
      break;
    case 'C':
      d.skel.kind = SkeletonKind::Circles;
      break;
    case 'I':
      d.skel.kind = SkeletonKind::Intervals;
      break;
    default:
      fail();
  }
  ++p;
  auto readInt = [&](char stop) {
    size_t q = enc.find(stop, p);
    if (q == std::string::npos) fail();
    int v = std::stoi(enc.substr(p, q - p));
    p = q + 1;
    return v;
  };
  d.skel.count = readInt('.');
  d.colors = readInt('.');
  d.trivalent = readInt('.');
  int L = readInt('|');
  size_t bar = enc.find('|', p);
  if (bar == std::string::npos) fail();
  auto readList = [&](const std::string& s) {
    std::vector<int> out;
    if (s.empty()) return out;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) out.push_back(std::stoi(tok));
    return out;
  };
  std::vector<int> tokens = readList(enc.substr(p, bar - p));
  std::vector<int> mates = readList(enc.substr(bar + 1));
  if ((int)tokens.size() != L || (int)mates.size() != 3 * d.trivalent + L)
    fail();
  d.legs.resize(L);
  std::vector<int> posCounter(std::max(d.skel.count, d.colors) + 1, 0);
  for (int j = 0; j < L; ++j) {
    if (d.skel.kind != SkeletonKind::Empty) {
      d.legs[j].component = tokens[j];
      d.legs[j].position = posCounter[tokens[j]]++;
    } else {
      d.legs[j].color = tokens[j];
    }
  }
  d.mate = mates;
  validate(d);
  CanonicalDiagram c;
  c.rep = std::move(d);
  c.enc = enc;
  return c;
}

}  // namespace jd
