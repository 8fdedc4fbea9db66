#ifndef JD_RELATIONS_HPP
#define JD_RELATIONS_HPP

#include <vector>

#include "jd/vector.hpp"

namespace jd {

enum class RelationKind { STU, FI, AS, IHX };

const char* relationName(RelationKind k);
RelationKind relationFromName(const std::string& s);

// Diagram surgeries underlying the local relations. All inputs must be
// valid; outputs are raw diagrams (not canonicalized).

// Exchange the skeleton positions of two legs.
Diagram swapLegs(const Diagram& d, int legA, int legB);

// STU S-term for adjacent legs a-before-b: both legs are replaced by a new
// trivalent vertex with cyclic order (string, edge-of-a, edge-of-b),
// attached at a's position. Convention: D_ab - D_ba - merge(a,b) = 0.
Diagram mergeLegs(const Diagram& d, int legA, int legB);

// Inverse of mergeLegs at leg j (whose edge must end at a trivalent
// vertex): splits that vertex back into two adjacent legs a-before-b.
Diagram unmergeLeg(const Diagram& d, int leg);

// Reverse the cyclic order at one trivalent vertex (an AS flip).
Diagram reverseVertex(const Diagram& d, int v);

// All instances of the local relation rooted at diagram d whose terms stay
// in d's (skeleton, degree) class. `withUnmerge` additionally emits the STU
// instances in which d itself is the merged term (used by saturation).
std::vector<DiagramVector> relationInstancesFor(const CanonicalDiagram& d,
                                                RelationKind kind,
                                                bool withUnmerge = false);

// Does the diagram contain an isolated chord (both endpoints adjacent on
// one skeleton component)?
bool hasIsolatedChord(const Diagram& d);

}  // namespace jd

#endif
