#include "jd/enumerate.hpp"

#include <functional>
#include <map>
#include <mutex>

namespace jd {

namespace {

// Enumerates perfect matchings on 3t + u half-edges up to the cheap
// symmetries (fresh vertices interchangeable and rotatable, fresh legs
// interchangeable). Complete up to isomorphism; duplicates are filtered by
// canonicalization afterwards.
void genMatchings(int t, int u,
                  const std::function<void(const std::vector<int>&)>& sink) {
  const int H = 3 * t + u;
  if (H % 2 != 0) return;
  std::vector<int> mate(H, -1);

  std::function<void()> rec = [&]() {
    int h = 0;
    while (h < H && mate[h] != -1) ++h;
    if (h == H) {
      sink(mate);
      return;
    }
    auto touched = [&](int v) {
      return mate[3 * v] != -1 || mate[3 * v + 1] != -1 ||
             mate[3 * v + 2] != -1;
    };
    mate[h] = -2;  // reserve so `touched` sees h's vertex as used
    int minFreshVertex = -1;
    for (int v = 0; v < t; ++v)
      if (!touched(v) && 3 * v > h) {
        minFreshVertex = v;
        break;
      }
    int minFreshLeg = -1;
    for (int j = 0; j < u; ++j)
      if (mate[3 * t + j] == -1 && 3 * t + j > h) {
        minFreshLeg = j;
        break;
      }
    mate[h] = -1;
    for (int h2 = h + 1; h2 < H; ++h2) {
      if (mate[h2] != -1) continue;
      if (h2 < 3 * t) {
        // Fresh vertices are interchangeable and rotatable: entering one is
        // only tried through the smallest fresh vertex at slot 0.
        int v = h2 / 3;
        if (!touched(v) && (v != minFreshVertex || h2 != 3 * v)) continue;
      } else {
        // All unmatched legs are equivalent: only the smallest is tried.
        if (h2 - 3 * t != minFreshLeg) continue;
      }
      mate[h] = h2;
      mate[h2] = h;
      rec();
      mate[h] = -1;
      mate[h2] = -1;
    }
  };
  rec();
}

std::map<std::pair<int, int>, std::vector<CanonicalDiagram>> pieceCache;
std::mutex pieceCacheMutex;

}  // namespace

const std::vector<CanonicalDiagram>& connectedPieces(int degree, int legs) {
  std::scoped_lock lock(pieceCacheMutex);
  auto key = std::make_pair(degree, legs);
  auto it = pieceCache.find(key);
  if (it != pieceCache.end()) return it->second;

  std::vector<CanonicalDiagram> out;
  std::map<std::string, CanonicalDiagram> seen;
  int t = 2 * degree - legs;
  if (t >= 0 && degree >= 1) {
    genMatchings(t, legs, [&](const std::vector<int>& mate) {
      Diagram d;
      d.skel = emptySkeleton();
      d.colors = legs > 0 ? 1 : 0;
      d.trivalent = t;
      for (int j = 0; j < legs; ++j) {
        Leg l;
        l.color = 1;
        d.legs.push_back(l);
      }
      d.mate = mate;
      auto [comp, n] = dashedComponents(d);
      if (n != 1) return;
      // Degenerate pieces (sign 0) are kept: with interchangeable legs a
      // piece can be degenerate here yet contribute once its legs land at
      // distinct positions (a tripod, say). Hopeless placements are culled
      // at emit time.
      CanonResult r = canonicalize(d);
      seen.emplace(r.canon.enc, r.canon);
    });
  }
  for (auto& [enc, c] : seen) out.push_back(c);
  auto [jt, ok] = pieceCache.emplace(key, std::move(out));
  (void)ok;
  return jt->second;
}

namespace {

struct Assembler {
  Space space;
  int degree;
  EnumOptions opt;
  long long candidates = 0;
  std::map<std::string, CanonicalDiagram> found;

  void budgetTick() {
    if (++candidates > opt.budget)
      throw BudgetError("enumeration budget exceeded after " +
                            std::to_string(found.size()) + " classes",
                        (long long)found.size());
  }

  // Catalog entry: (degree, legs, piece). Multisets are nondecreasing
  // sequences of catalog indices.
  struct CatEntry {
    int degree, legs;
    const CanonicalDiagram* piece;
  };
  std::vector<CatEntry> catalog;

  void buildCatalog() {
    bool legless = space.skel.kind == SkeletonKind::Empty && space.colors == 0;
    int minLegs = opt.trivalentOnly || legless ? 0 : 1;
    for (int d = 1; d <= degree; ++d) {
      for (int u = minLegs; u <= 2 * d; ++u) {
        if (opt.trivalentOnly && u > 0) continue;
        if (space.skel.kind == SkeletonKind::Empty && space.colors == 0 &&
            u > 0)
          continue;  // legless space admits no legs
        for (const CanonicalDiagram& p : connectedPieces(d, u))
          catalog.push_back({d, u, &p});
      }
    }
  }

  std::vector<const CanonicalDiagram*> chosen;

  void chooseMultisets(int fromIdx, int degLeft) {
    if (degLeft == 0) {
      placeAll();
      return;
    }
    if (opt.connectedOnly && !chosen.empty()) return;
    for (int i = fromIdx; i < (int)catalog.size(); ++i) {
      if (catalog[i].degree > degLeft) continue;
      chosen.push_back(catalog[i].piece);
      chooseMultisets(i, degLeft - catalog[i].degree);
      chosen.pop_back();
    }
  }

  // Disjoint union of the chosen pieces with fresh half-edge ids.
  Diagram combine(std::vector<int>* legOffsets) const {
    Diagram d;
    d.skel = space.skel;
    d.colors = space.colors;
    int t = 0, L = 0;
    for (const CanonicalDiagram* p : chosen) {
      t += p->rep.trivalent;
      L += p->rep.legCount();
    }
    d.trivalent = t;
    d.legs.resize(L);
    d.mate.assign(3 * t + L, -1);
    int vOff = 0, lOff = 0;
    for (const CanonicalDiagram* p : chosen) {
      const Diagram& pd = p->rep;
      int pt = pd.trivalent, pl = pd.legCount();
      auto remap = [&](int h) {
        return h < 3 * pt ? h + 3 * vOff : 3 * t + (h - 3 * pt) + lOff;
      };
      for (int h = 0; h < pd.halfEdges(); ++h)
        d.mate[remap(h)] = remap(pd.mate[h]);
      legOffsets->push_back(lOff);
      vOff += pt;
      lOff += pl;
    }
    return d;
  }

  void emit(Diagram& d) {
    budgetTick();
    CanonResult r = canonicalize(d);
    if (r.sign == 0 && !opt.includeDegenerate) return;
    found.emplace(r.canon.enc, r.canon);
  }

  void placeAll() {
    std::vector<int> legOffsets;
    Diagram base = combine(&legOffsets);
    int L = base.legCount();

    if (space.skel.kind == SkeletonKind::Empty) {
      if (space.colors == 0) {
        if (L != 0) return;
        emit(base);
        return;
      }
      // Color assignment for open diagrams.
      std::vector<int> color(L, 0);
      std::vector<int> used(space.colors + 1, 0);
      std::function<void(int)> rec = [&](int i) {
        if (i == L) {
          if (!opt.legsPerColor.empty())
            for (int c = 1; c <= space.colors; ++c)
              if (used[c] != opt.legsPerColor[c - 1]) return;
          Diagram d = base;
          for (int j = 0; j < L; ++j) d.legs[j].color = color[j];
          emit(d);
          return;
        }
        for (int c = 1; c <= space.colors; ++c) {
          if (!opt.legsPerColor.empty() && used[c] >= opt.legsPerColor[c - 1])
            continue;
          color[i] = c;
          ++used[c];
          rec(i + 1);
          --used[c];
        }
      };
      rec(0);
      return;
    }

    // Skeleton placement: insert legs one at a time into per-component
    // sequences; every linear arrangement arises exactly once.
    int m = space.skel.count;
    std::vector<std::vector<int>> seq(m);
    std::function<void(int)> rec = [&](int i) {
      if (i == L) {
        Diagram d = base;
        for (int c = 0; c < m; ++c)
          for (int k = 0; k < (int)seq[c].size(); ++k) {
            d.legs[seq[c][k]].component = c + 1;
            d.legs[seq[c][k]].position = k;
          }
        emit(d);
        return;
      }
      for (int c = 0; c < m; ++c) {
        for (int slot = 0; slot <= (int)seq[c].size(); ++slot) {
          seq[c].insert(seq[c].begin() + slot, i);
          rec(i + 1);
          seq[c].erase(seq[c].begin() + slot);
        }
      }
    };
    rec(0);
  }
};

}  // namespace

std::vector<CanonicalDiagram> enumerateDiagrams(const Space& space, int degree,
                                                const EnumOptions& opt) {
  if (degree < 0) throw InputError("negative degree");
  if (!opt.legsPerColor.empty() &&
      (int)opt.legsPerColor.size() != space.colors)
    throw InputError("legsPerColor size must match color count");

  Assembler a;
  a.space = space;
  a.degree = degree;
  a.opt = opt;

  std::vector<CanonicalDiagram> out;
  if (degree == 0) {
    bool wantLegs = false;
    for (int k : opt.legsPerColor) wantLegs |= k > 0;
    if (!wantLegs) {
      Diagram d;
      d.skel = space.skel;
      d.colors = space.colors;
      out.push_back(canonicalize(d).canon);
    }
    return out;
  }

  a.buildCatalog();
  a.chooseMultisets(0, degree);
  for (auto& [enc, c] : a.found) out.push_back(c);
  return out;
}

}  // namespace jd
