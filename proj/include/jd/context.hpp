#ifndef JD_CONTEXT_HPP
#define JD_CONTEXT_HPP

#include <map>
#include <string>
#include <vector>

#include "jd/enumerate.hpp"
#include "jd/relations.hpp"
#include "jd/vector.hpp"

namespace jd {

enum class ContextMode { Full, Saturation };
enum class ContextStatus { Complete, Budgeted };

struct ContextOptions {
  ContextMode mode = ContextMode::Full;
  std::vector<RelationKind> kinds = {RelationKind::STU, RelationKind::FI};
  long long budget = 200'000'000;
};

struct ReduceResult {
  DiagramVector normal;
  // True when a zero normal form certifies the class is zero outright;
  // false when it is only zero modulo the indexed relations.
  bool definitive = true;
};

// A homogeneous diagram space together with an echelonized relation matrix.
// Full mode enumerates every diagram class of the (space, degree) pair;
// saturation mode grows the index from seed diagrams by applying relation
// moves (including un-merging) until closure or budget exhaustion.
class QuotientContext {
 public:
  using Row = std::vector<std::pair<int, Rat>>;  // sorted by column

  QuotientContext(const Space& space, int degree,
                  const ContextOptions& opt = {});
  QuotientContext(const Space& space, int degree,
                  const std::vector<CanonicalDiagram>& seeds,
                  const ContextOptions& opt);

  // Normal form: pivot columns eliminated in ascending order. Unique for a
  // fixed context. Throws if v mentions diagrams outside the index.
  ReduceResult reduce(const DiagramVector& v) const;

  // Generators minus rank. Only meaningful for complete full contexts.
  long long dimension() const;

  ContextStatus status() const { return status_; }
  ContextMode mode() const { return mode_; }
  const Space& space() const { return space_; }
  int degree() const { return degree_; }
  const std::vector<RelationKind>& kinds() const { return kinds_; }
  const std::vector<CanonicalDiagram>& generators() const { return gens_; }
  size_t rank() const { return pivots_.size(); }

  // Identifier for caching: space, degree, kinds, mode.
  std::string key() const;

  std::string writeText() const;
  static QuotientContext readText(const std::string& text);

  // Re-derives relation rows for every generator and checks each reduces to
  // zero; used to validate deserialized contexts.
  bool selfCheck() const;

 private:
  QuotientContext() = default;
  void build(const std::vector<CanonicalDiagram>& seeds, long long budget);
  void assemble(std::vector<DiagramVector>& instances);
  Row reduceRow(const Row& r) const;

  Space space_;
  int degree_ = 0;
  ContextMode mode_ = ContextMode::Full;
  ContextStatus status_ = ContextStatus::Complete;
  std::vector<RelationKind> kinds_;
  std::vector<CanonicalDiagram> gens_;       // sorted by encoding
  std::map<std::string, int> index_;         // encoding -> column
  std::map<int, Row> pivots_;                // pivot column -> row, lead 1
};

std::string spaceName(const Space& s);
Space spaceFromName(const std::string& name);

// The cache identifier a context built with these parameters would report.
std::string contextKey(const Space& space, int degree,
                       const ContextOptions& opt);

}  // namespace jd

#endif
