#ifndef JD_MAPS_HPP
#define JD_MAPS_HPP

#include <vector>

#include "jd/vector.hpp"

namespace jd {

// ---- products -------------------------------------------------------------

// Side-by-side union of two diagrams over the same color set (or two legless
// diagrams); degree adds. Bilinear on vectors.
Diagram disjointUnionRaw(const Diagram& a, const Diagram& b);
DiagramVector disjointUnion(const DiagramVector& a, const DiagramVector& b);

// Stacking product on an interval skeleton: per interval, all of a's legs
// come before all of b's. Unit = empty diagram.
DiagramVector stack(const DiagramVector& a, const DiagramVector& b);

// Relabel colors (open diagrams) or skeleton components by the permutation
// eta (1-based images: color c becomes eta[c-1]).
Diagram permuteColorsRaw(const Diagram& d, const std::vector<int>& eta);
DiagramVector permuteColors(const DiagramVector& x,
                            const std::vector<int>& eta);

// ---- symmetrization and its inverse ---------------------------------------

// chi: open diagrams with colors in 1..m -> diagrams on m intervals; the
// average (1/prod k_c!) over all linear orders of the c-colored legs on
// interval c. Linear.
DiagramVector chi(const DiagramVector& x, int m);

// Inverse of chi by the leg-count recursion: forgetting the order is chi up
// to correction terms with strictly fewer legs (each an STU merge), which
// are inverted recursively. pbwInverse(chi(x)) == x holds exactly at the
// diagram level; chi(pbwInverse(y)) == y holds modulo STU, since every
// reordering step is an STU rewrite. Memoized; thread-safe.
DiagramVector pbwInverse(const DiagramVector& y);

// ---- skeleton plumbing ----------------------------------------------------

// Interval skeleton -> circle skeleton; each interval's linear order becomes
// the cyclic order.
DiagramVector close(const DiagramVector& y);

// Circle skeleton -> interval skeleton, cutting circle c right before its
// rot[c-1]-th leg in canonical cyclic order (all zeros when rot is empty).
Diagram cutCirclesRaw(const Diagram& d, const std::vector<int>& rot = {});
DiagramVector cutCircles(const DiagramVector& y,
                         const std::vector<int>& rot = {});

// Kill diagrams with legs on interval i, renumber the remaining intervals.
DiagramVector deleteString(const DiagramVector& y, int i);

// Single interval -> m intervals: sum over all lifts of the legs to the m
// strings, preserving relative order on each string.
DiagramVector cable(const DiagramVector& y, int m);

// ---- specific shapes ------------------------------------------------------

// The 2j-wheel: a cycle of 2j trivalent vertices, each with one leg; legs
// laid out on one interval in cycle order (or all colored 1 for the open
// variant). Degree 2j.
CanonicalDiagram wheel(int legs);
CanonicalDiagram wheelOpen(int legs);

// ---- circle insertion -----------------------------------------------------

// Insertion data for a connected trivalent legless diagram: circles 1..m
// distributed over the edges of gamma, in a chosen order along each edge.
// Edges are indexed by their smaller half-edge id, ascending.
struct Placement {
  Diagram gamma;
  std::vector<std::vector<int>> circlesOnEdge;  // per edge, ordered circle ids
};

std::vector<std::pair<int, int>> edgeList(const Diagram& d);

// Deterministic default: circles assigned round-robin over edges in edge
// order, appended in increasing id order.
Placement roundRobinPlacement(const Diagram& gamma, int circles);

// Cut each hosting edge and thread the listed circles along it; every
// inserted circle receives the two cut ends as adjacent legs. A diagram of
// degree n-1 with n+1 circles inserted has degree 2n.
CanonResult insertCircles(const Placement& pl);

// ---- joining and projection ----------------------------------------------

// Terms with exactly two legs of every color 1..n+1 (and none outside): the
// pair of each color is joined into an edge; all other terms map to zero.
// A join closing a free loop also maps the term to zero.
DiagramVector joinPairs(const DiagramVector& x, int n);

// Keep connected legless terms, drop the rest (the empty diagram counts as
// disconnected). Errors on terms with legs.
DiagramVector projectConnected(const DiagramVector& x);

// ---- truncated exp/log for disjoint union ---------------------------------

// expUnion: P must have no degree-0 part; colors fixes the unit diagram.
// logUnion: G must have degree-0 part equal to 1 * empty.
GradedVector expUnion(const GradedVector& P, int colors, int bound);
GradedVector logUnion(const GradedVector& G, int colors, int bound);

}  // namespace jd

#endif
