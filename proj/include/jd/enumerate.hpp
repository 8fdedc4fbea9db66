#ifndef JD_ENUMERATE_HPP
#define JD_ENUMERATE_HPP

#include <vector>

#include "jd/canonical.hpp"

namespace jd {

// Where the diagrams live: a skeleton, or the empty skeleton with colors
// (open diagrams), or neither (legless trivalent diagrams).
struct Space {
  Skeleton skel;
  int colors = 0;

  bool operator==(const Space&) const = default;
};

struct EnumOptions {
  bool connectedOnly = false;
  bool trivalentOnly = false;
  // Also return AS-degenerate classes (each is zero as a vector, but still
  // sources valid relation instances among the non-degenerate classes).
  bool includeDegenerate = false;
  std::vector<int> legsPerColor;  // empty = unconstrained; else size = colors
  long long budget = 200'000'000;  // candidate constructions
};

// All isomorphism classes of valid diagrams of the given degree, with
// AS-degenerate classes omitted, ordered by encoding. Throws BudgetError
// carrying the class count found so far if the budget is exceeded.
std::vector<CanonicalDiagram> enumerateDiagrams(const Space& space, int degree,
                                                const EnumOptions& opt = {});

// Connected abstract pieces of the given degree with `legs` interchangeable
// legs (color 1; legless when legs == 0). Results are cached.
const std::vector<CanonicalDiagram>& connectedPieces(int degree, int legs);

}  // namespace jd

#endif
