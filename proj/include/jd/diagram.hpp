#ifndef JD_DIAGRAM_HPP
#define JD_DIAGRAM_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace jd {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ValidationError : Error {
  explicit ValidationError(const std::string& msg) : Error(msg) {}
};

struct InputError : Error {
  explicit InputError(const std::string& msg) : Error(msg) {}
};

// Budget exhausted mid-computation; carries whatever partial count was reached.
struct BudgetError : Error {
  long long partial;
  BudgetError(const std::string& msg, long long partialCount)
      : Error(msg), partial(partialCount) {}
};

enum class SkeletonKind { Empty, Circles, Intervals };

struct Skeleton {
  SkeletonKind kind = SkeletonKind::Empty;
  int count = 0;  // components, 1-based externally

  bool operator==(const Skeleton&) const = default;
};

inline Skeleton emptySkeleton() { return {SkeletonKind::Empty, 0}; }
inline Skeleton circles(int m) { return {SkeletonKind::Circles, m}; }
inline Skeleton intervals(int m) { return {SkeletonKind::Intervals, m}; }

std::string skeletonName(const Skeleton& s);

// A univalent vertex. On a skeleton: (component, position), positions are
// arbitrary distinct integers per component, only their (cyclic) order
// matters. Open diagram: a color in 1..m.
struct Leg {
  int component = 0;  // 1-based, 0 if open
  int position = 0;
  int color = 0;  // 1-based, 0 if on skeleton
};

// Unitrivalent diagram. Trivalent vertex v owns half-edges 3v, 3v+1, 3v+2 in
// cyclic order; leg j owns half-edge 3T + j. `mate` is a perfect matching.
struct Diagram {
  Skeleton skel;
  int colors = 0;  // color count for open diagrams (skel must be Empty)
  int trivalent = 0;
  std::vector<Leg> legs;
  std::vector<int> mate;

  int legCount() const { return (int)legs.size(); }
  int halfEdges() const { return 3 * trivalent + legCount(); }
  int degree() const { return (trivalent + legCount()) / 2; }
  bool open() const { return colors > 0; }
};

// Throws ValidationError naming the offending half-edge / leg.
void validate(const Diagram& d);

// Legs of component c in skeleton order (circles: the cyclic sequence
// starting at the smallest position).
std::vector<int> legsOnComponent(const Diagram& d, int c);

// Connected components of the dashed graph; returns per-half-edge component
// id plus the number of components.
std::pair<std::vector<int>, int> dashedComponents(const Diagram& d);

}  // namespace jd

#endif
