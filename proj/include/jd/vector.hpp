#ifndef JD_VECTOR_HPP
#define JD_VECTOR_HPP

#include <gmpxx.h>

#include <map>

#include "jd/canonical.hpp"

namespace jd {

using Rat = mpq_class;

// Finite formal sum of canonical diagrams with exact rational coefficients.
// Zero coefficients are never stored; AS-degenerate terms never enter.
class DiagramVector {
 public:
  using Terms = std::map<std::string, std::pair<CanonicalDiagram, Rat>>;

  DiagramVector() = default;

  // Canonicalizes and adds sign * coeff * d. Degenerate diagrams vanish.
  void addRaw(const Diagram& d, const Rat& coeff);
  void add(const CanonicalDiagram& c, const Rat& coeff);
  void add(const DiagramVector& v, const Rat& scale = 1);

  DiagramVector& operator+=(const DiagramVector& v) {
    add(v);
    return *this;
  }
  DiagramVector& operator-=(const DiagramVector& v) {
    add(v, -1);
    return *this;
  }
  DiagramVector& operator*=(const Rat& s);

  bool zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }
  Rat coeff(const CanonicalDiagram& c) const;

  bool operator==(const DiagramVector& v) const;

  // Common denominator of all coefficients (1 for the zero vector).
  mpz_class commonDenominator() const;

  static DiagramVector single(const CanonicalDiagram& c, const Rat& coeff = 1);

 private:
  Terms terms_;
};

DiagramVector operator+(DiagramVector a, const DiagramVector& b);
DiagramVector operator-(DiagramVector a, const DiagramVector& b);
DiagramVector operator*(const Rat& s, DiagramVector a);

// Finite map degree -> homogeneous vector with a truncation bound.
struct GradedVector {
  int bound = 0;
  std::map<int, DiagramVector> parts;

  void add(int degree, const DiagramVector& v, const Rat& scale = 1);
  DiagramVector part(int degree) const;
  void prune();
};

}  // namespace jd

#endif
