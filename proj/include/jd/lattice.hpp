#ifndef JD_LATTICE_HPP
#define JD_LATTICE_HPP

#include <gmpxx.h>

#include <map>
#include <mutex>
#include <vector>

#include "jd/diagram.hpp"

namespace jd {

using Int = mpz_class;
using IntRow = std::map<int, Int>;  // coordinate -> value, zeros omitted

// An integer lattice in Z^dim given by two column families: divisibility
// queries ask whether v lies in d * span(scaled) + span(free). Triangular
// integer bases are computed lazily per modulus and cached.
class IntegerLattice {
 public:
  explicit IntegerLattice(int dim) : dim_(dim) {}

  int dim() const { return dim_; }
  // Columns whose span gets multiplied by d in queries (the generators).
  void addScaled(const IntRow& col);
  // Columns with unconstrained integer coefficients (the relations).
  void addFree(const IntRow& col);

  struct Divisibility {
    bool divisible = false;
    IntRow witness;  // w with v == d*w + (element of the free span)
  };

  Divisibility divisibility(const IntRow& v, const Int& d) const;

 private:
  struct EchRow {
    IntRow vec;
    std::map<int, Int> combo;  // original column id -> coefficient
  };
  struct Echelon {
    std::map<int, EchRow> pivots;  // leading coordinate -> row, lead > 0
  };

  void checkCol(const IntRow& col) const;
  const Echelon& echelon(const Int& d) const;

  int dim_;
  std::vector<IntRow> scaled_, free_;
  mutable std::map<Int, Echelon> cache_;
  mutable std::mutex mutex_;
};

}  // namespace jd

#endif
