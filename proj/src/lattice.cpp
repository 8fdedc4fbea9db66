#include "jd/lattice.hpp"

#include "jd/diagram.hpp"

namespace jd {

namespace {

void axpy(IntRow& dst, const Int& c, const IntRow& src) {
  if (c == 0) return;
  for (const auto& [k, val] : src) {
    Int& slot = dst[k];
    slot += c * val;
    if (slot == 0) dst.erase(k);
  }
}

void axpyCombo(std::map<int, Int>& dst, const Int& c,
               const std::map<int, Int>& src) {
  if (c == 0) return;
  for (const auto& [k, val] : src) {
    Int& slot = dst[k];
    slot += c * val;
    if (slot == 0) dst.erase(k);
  }
}

}  // namespace

void IntegerLattice::checkCol(const IntRow& col) const {
  for (const auto& [k, val] : col)
    if (k < 0 || k >= dim_)
      throw InputError("lattice column coordinate out of range");
  std::scoped_lock lock(mutex_);
  cache_.clear();
}

void IntegerLattice::addScaled(const IntRow& col) {
  checkCol(col);
  scaled_.push_back(col);
}

void IntegerLattice::addFree(const IntRow& col) {
  checkCol(col);
  free_.push_back(col);
}

const IntegerLattice::Echelon& IntegerLattice::echelon(const Int& d) const {
  std::scoped_lock lock(mutex_);
  auto it = cache_.find(d);
  if (it != cache_.end()) return it->second;
  Echelon& ech = cache_[d];

  auto insert = [&ech](EchRow r) {
    while (!r.vec.empty()) {
      int c = r.vec.begin()->first;
      Int a = r.vec.begin()->second;
      auto pit = ech.pivots.find(c);
      if (pit == ech.pivots.end()) {
        if (a < 0) {
          for (auto& [k, val] : r.vec) val = -val;
          for (auto& [k, val] : r.combo) val = -val;
        }
        ech.pivots.emplace(c, std::move(r));
        return;
      }
      EchRow& p = pit->second;
      Int b = p.vec.begin()->second;
      if (a % b == 0) {
        Int q = a / b;
        axpy(r.vec, -q, p.vec);
        axpyCombo(r.combo, -q, p.combo);
        continue;
      }
      // Unimodular update: replace the pivot by the gcd combination and
      // continue inserting the complementary row, which vanishes at c.
      Int g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), b.get_mpz_t(),
                 a.get_mpz_t());
      EchRow merged;
      axpy(merged.vec, s, p.vec);
      axpy(merged.vec, t, r.vec);
      axpyCombo(merged.combo, s, p.combo);
      axpyCombo(merged.combo, t, r.combo);
      EchRow rest;
      axpy(rest.vec, a / g, p.vec);
      axpy(rest.vec, -(b / g), r.vec);
      axpyCombo(rest.combo, a / g, p.combo);
      axpyCombo(rest.combo, -(b / g), r.combo);
      pit->second = std::move(merged);
      r = std::move(rest);
    }
  };

  int colId = 0;
  for (const IntRow& col : scaled_) {
    EchRow r;
    for (const auto& [k, val] : col) r.vec[k] = d * val;
    r.combo[colId++] = 1;
    insert(std::move(r));
  }
  for (const IntRow& col : free_) {
    EchRow r;
    r.vec = col;
    r.combo[colId++] = 1;
    insert(std::move(r));
  }
  return ech;
}

IntegerLattice::Divisibility IntegerLattice::divisibility(const IntRow& v,
                                                          const Int& d) const {
  if (d <= 0) throw InputError("divisibility modulus must be positive");
  for (const auto& [k, val] : v)
    if (k < 0 || k >= dim_)
      throw InputError("lattice query coordinate out of range");
  const Echelon& ech = echelon(d);
  IntRow w = v;
  std::map<int, Int> combo;
  while (!w.empty()) {
    int c = w.begin()->first;
    Int a = w.begin()->second;
    auto pit = ech.pivots.find(c);
    if (pit == ech.pivots.end()) return {};
    Int b = pit->second.vec.begin()->second;
    if (a % b != 0) return {};
    Int q = a / b;
    axpy(w, -q, pit->second.vec);
    axpyCombo(combo, q, pit->second.combo);
  }
  Divisibility out;
  out.divisible = true;
  for (const auto& [col, coeff] : combo)
    if (col < (int)scaled_.size()) axpy(out.witness, coeff, scaled_[col]);
  return out;
}

}  // namespace jd
