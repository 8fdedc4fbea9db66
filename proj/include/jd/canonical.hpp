#ifndef JD_CANONICAL_HPP
#define JD_CANONICAL_HPP

#include <string>
#include <utility>

#include "jd/diagram.hpp"

namespace jd {

// Sign-normalized representative of an isomorphism class of diagrams.
// Two diagrams are isomorphic (respecting skeleton order/orientation and
// vertex cyclic orders, up to rotation of circle starting points and AS
// sign) iff their encodings are equal.
struct CanonicalDiagram {
  Diagram rep;
  std::string enc;

  int degree() const { return rep.degree(); }
  const Skeleton& skeleton() const { return rep.skel; }

  bool operator<(const CanonicalDiagram& o) const { return enc < o.enc; }
  bool operator==(const CanonicalDiagram& o) const { return enc == o.enc; }
};

struct CanonResult {
  CanonicalDiagram canon;
  int sign;  // d == sign * canon; 0 iff d is AS-degenerate
};

// Validates, then searches over all labelings compatible with the symmetry
// group (vertex relabelings, per-vertex rotations/reversals with AS sign,
// circle rotations, same-color leg permutations) for the minimal encoding.
CanonResult canonicalize(const Diagram& d);

// Rebuilds a diagram from its encoding. Inverse of CanonicalDiagram::enc.
CanonicalDiagram decodeEncoding(const std::string& enc);

}  // namespace jd

#endif
