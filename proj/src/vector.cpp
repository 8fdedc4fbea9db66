#include "jd/vector.hpp"

namespace jd {

void DiagramVector::addRaw(const Diagram& d, const Rat& coeff) {
  if (coeff == 0) return;
  CanonResult r = canonicalize(d);
  if (r.sign == 0) return;
  add(r.canon, r.sign * coeff);
}

void DiagramVector::add(const CanonicalDiagram& c, const Rat& rawCoeff) {
  Rat coeff = rawCoeff;
  coeff.canonicalize();  // GMP comparisons assume canonical form
  if (coeff == 0) return;
  auto it = terms_.find(c.enc);
  if (it == terms_.end()) {
    terms_.emplace(c.enc, std::make_pair(c, coeff));
  } else {
    it->second.second += coeff;
    if (it->second.second == 0) terms_.erase(it);
  }
}

void DiagramVector::add(const DiagramVector& v, const Rat& scale) {
  if (scale == 0) return;
  for (const auto& [enc, tc] : v.terms_) add(tc.first, tc.second * scale);
}

DiagramVector& DiagramVector::operator*=(const Rat& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [enc, tc] : terms_) tc.second *= s;
  return *this;
}

Rat DiagramVector::coeff(const CanonicalDiagram& c) const {
  auto it = terms_.find(c.enc);
  return it == terms_.end() ? Rat(0) : it->second.second;
}

bool DiagramVector::operator==(const DiagramVector& v) const {
  if (terms_.size() != v.terms_.size()) return false;
  auto it = terms_.begin();
  auto jt = v.terms_.begin();
  for (; it != terms_.end(); ++it, ++jt)
    if (it->first != jt->first || it->second.second != jt->second.second)
      return false;
  return true;
}

mpz_class DiagramVector::commonDenominator() const {
  mpz_class den = 1;
  for (const auto& [enc, tc] : terms_)
    den = lcm(den, tc.second.get_den());
  return den;
}

DiagramVector DiagramVector::single(const CanonicalDiagram& c,
                                    const Rat& coeff) {
  DiagramVector v;
  v.add(c, coeff);
  return v;
}

DiagramVector operator+(DiagramVector a, const DiagramVector& b) {
  a += b;
  return a;
}
DiagramVector operator-(DiagramVector a, const DiagramVector& b) {
  a -= b;
  return a;
}
DiagramVector operator*(const Rat& s, DiagramVector a) {
  a *= s;
  return a;
}

void GradedVector::add(int degree, const DiagramVector& v, const Rat& scale) {
  if (degree > bound) return;
  parts[degree].add(v, scale);
  if (parts[degree].zero()) parts.erase(degree);
}

DiagramVector GradedVector::part(int degree) const {
  auto it = parts.find(degree);
  return it == parts.end() ? DiagramVector() : it->second;
}

void GradedVector::prune() {
  for (auto it = parts.begin(); it != parts.end();) {
    if (it->second.zero() || it->first > bound)
      it = parts.erase(it);
    else
      ++it;
  }
}

}  // namespace jd
