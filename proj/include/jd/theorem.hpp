#ifndef JD_THEOREM_HPP
#define JD_THEOREM_HPP

#include <string>
#include <vector>

#include "jd/context.hpp"
#include "jd/json_io.hpp"
#include "jd/lattice.hpp"
#include "jd/vector.hpp"

namespace jd {

// Permutations of {1..k} in one-line image notation (sigma[i-1] = image of i).
std::vector<std::vector<int>> allPermutations(int k);

// Caterpillar tree of degree n with n+1 legs: spine end leaves colored n+1
// and n, inner leaves colored sigma(1)..sigma(n-1) left to right. sigma is a
// permutation of {1..n-1}.
Diagram treeRaw(int n, const std::vector<int>& sigma);
CanonicalDiagram tree(int n, const std::vector<int>& sigma);

// close(chi(tree(sigma) disjoint-union tree(sigma'))): the degree-2n element
// on n+1 circles underlying the pairing coefficients. Unreduced.
DiagramVector pairingElementRaw(int n, const std::vector<int>& sigma,
                                const std::vector<int>& sigmaPrime);
// Normal form of the above in the supplied context.
DiagramVector pairingElement(int n, const std::vector<int>& sigma,
                             const std::vector<int>& sigmaPrime,
                             const QuotientContext& ctx);

// Rational values on degree-2n diagrams over n+1 circles; diagrams outside
// the table count as zero. A valid weight system kills every STU/FI relation
// instance touching its support.
class WeightSystem {
 public:
  WeightSystem(int n, std::map<std::string, std::pair<CanonicalDiagram, Rat>>
                          values);

  static WeightSystem fromJson(const json& j, const std::string& path = "$");
  // Dual of a single basis diagram, for tests and artificial runs. Not
  // necessarily relation-compatible; validate() decides.
  static WeightSystem dual(int n, const CanonicalDiagram& b);
  json toJson() const;

  int n() const { return n_; }
  Rat evaluate(const DiagramVector& v) const;
  // Throws Error carrying the violating relation instance, if any.
  void validate() const;

 private:
  int n_;
  std::map<std::string, std::pair<CanonicalDiagram, Rat>> values_;
};

Rat coefficient(const WeightSystem& w, const std::vector<int>& sigma,
                const std::vector<int>& sigmaPrime);

// Symmetric matrix (f_{sigma,sigma'}) over S_{n-1} x S_{n-1}.
struct QuadraticForm {
  int n = 0;
  std::vector<std::vector<int>> perms;  // index order
  std::vector<std::vector<Rat>> f;

  static QuadraticForm fromWeightSystem(const WeightSystem& w);
  bool integerEntries() const;
  bool evenDiagonal() const;
};

// (1/2) sum_{s,s'} f_{s,s'} mu(s) mu(s'); mu indexed like form.perms.
Rat quadraticFormEval(const QuadraticForm& form, const std::vector<Rat>& mu);

struct Report {
  std::string suite;
  json parameters = json::object();
  std::string status;  // "pass" | "fail" | "inconclusive"
  std::vector<json> witnesses;
  std::map<std::string, double> timings;  // stage -> seconds

  json toJson() const;
};

// Checks that inserting n+1 circles into each connected legless generator of
// degree n-1, cutting, inverting chi, joining leg pairs per color, and
// projecting to connected diagrams returns the generator (modulo AS/IHX),
// for every generator and independently of the cut points.
Report verifyLeftInverse(int n);

// Clears denominators of pairingElement(n, sigma, sigma) and checks
// divisibility by 2 modulo the integral STU/FI relation lattice. `big` is
// the full context at (n+1 circles, degree 2n); built on demand when null.
Report verifyEvenness(int n, const std::vector<int>& sigma,
                      const QuotientContext* big = nullptr);

// Reduces close(stack(chi(tree(2,id)), cable(wheel(2), 3))) in the full
// degree-4 3-circle context and checks it vanishes; also sweeps one-leg
// circle diagrams as the mechanism check and records a non-vanishing
// control without one-leg circles.
Report verifyWheelVanishing(int n, const QuotientContext* big = nullptr);

}  // namespace jd

#endif
