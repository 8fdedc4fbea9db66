#include "jd/theorem.hpp"

#include <algorithm>
#include <chrono>
#include <optional>

#include "jd/maps.hpp"
#include "jd/relations.hpp"

namespace jd {

namespace {

using Clock = std::chrono::steady_clock;

double seconds(Clock::time_point from) {
  return std::chrono::duration<double>(Clock::now() - from).count();
}

void checkPermutation(const std::vector<int>& sigma, int k) {
  if ((int)sigma.size() != k)
    throw InputError("permutation must have " + std::to_string(k) +
                     " entries");
  std::vector<char> seen(k + 1, 0);
  for (int v : sigma) {
    if (v < 1 || v > k || seen[v]) throw InputError("not a permutation");
    seen[v] = 1;
  }
}

json sigmaJson(const std::vector<int>& sigma) {
  json j = json::array();
  for (int v : sigma) j.push_back(v);
  return j;
}

}  // namespace

std::vector<std::vector<int>> allPermutations(int k) {
  std::vector<int> base(k);
  for (int i = 0; i < k; ++i) base[i] = i + 1;
  std::vector<std::vector<int>> out;
  do {
    out.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  return out;
}

Diagram treeRaw(int n, const std::vector<int>& sigma) {
  if (n < 2) throw InputError("tree needs n >= 2");
  checkPermutation(sigma, n - 1);
  int T = n - 1;
  Diagram d;
  d.colors = n + 1;
  d.trivalent = T;
  std::vector<int> colors;
  colors.push_back(n + 1);
  for (int i = 1; i <= n - 1; ++i) colors.push_back(sigma[i - 1]);
  colors.push_back(n);
  for (int c : colors) {
    Leg l;
    l.color = c;
    d.legs.push_back(l);
  }
  d.mate.assign(3 * T + n + 1, -1);
  auto link = [&d](int a, int b) {
    d.mate[a] = b;
    d.mate[b] = a;
  };
  link(0, 3 * T + 0);
  link(1, 3 * T + 1);
  for (int i = 1; i < T; ++i) {
    link(3 * (i - 1) + 2, 3 * i);
    link(3 * i + 1, 3 * T + 1 + i);
  }
  link(3 * (T - 1) + 2, 3 * T + n);
  validate(d);
  return d;
}

CanonicalDiagram tree(int n, const std::vector<int>& sigma) {
  CanonResult r = canonicalize(treeRaw(n, sigma));
  if (r.sign == 0) throw Error("tree is unexpectedly degenerate");
  return r.canon;
}

DiagramVector pairingElementRaw(int n, const std::vector<int>& sigma,
                                const std::vector<int>& sigmaPrime) {
  DiagramVector a, b;
  a.addRaw(treeRaw(n, sigma), 1);
  b.addRaw(treeRaw(n, sigmaPrime), 1);
  return close(chi(disjointUnion(a, b), n + 1));
}

DiagramVector pairingElement(int n, const std::vector<int>& sigma,
                             const std::vector<int>& sigmaPrime,
                             const QuotientContext& ctx) {
  return ctx.reduce(pairingElementRaw(n, sigma, sigmaPrime)).normal;
}

// ---- weight systems -------------------------------------------------------

WeightSystem::WeightSystem(
    int n, std::map<std::string, std::pair<CanonicalDiagram, Rat>> values)
    : n_(n), values_(std::move(values)) {
  for (const auto& [enc, dv] : values_) {
    const Diagram& d = dv.first.rep;
    if (d.skel != circles(n_ + 1) || d.degree() != 2 * n_)
      throw InputError("weight system entry off the (n+1 circles, degree 2n) "
                       "class");
  }
}

WeightSystem WeightSystem::fromJson(const json& j, const std::string& path) {
  if (!j.is_object()) throw InputError(path + ": expected object");
  if (!j.contains("n") || !j.at("n").is_number_integer())
    throw InputError(path + ".n: expected integer");
  if (!j.contains("defaultZero") || !j.at("defaultZero").is_boolean() ||
      !j.at("defaultZero").get<bool>())
    throw InputError(path + ".defaultZero: must be true");
  int n = j.at("n").get<int>();
  if (!j.contains("values") || !j.at("values").is_array())
    throw InputError(path + ".values: expected array");
  std::map<std::string, std::pair<CanonicalDiagram, Rat>> values;
  int idx = 0;
  for (const json& t : j.at("values")) {
    std::string tp = path + ".values[" + std::to_string(idx++) + "]";
    if (!t.is_object() || !t.contains("diagram"))
      throw InputError(tp + ": expected object with \"diagram\"");
    Diagram d = diagramFromJson(t.at("diagram"), tp + ".diagram");
    Rat val = ratFromJson(t, tp);
    CanonResult r = canonicalize(d);
    if (r.sign == 0) {
      if (val != 0)
        throw InputError(tp + ": nonzero value on a diagram that is zero by "
                         "antisymmetry");
      continue;
    }
    Rat& slot = values[r.canon.enc].second;
    values[r.canon.enc].first = r.canon;
    slot += r.sign * val;
  }
  for (auto it = values.begin(); it != values.end();)
    it = it->second.second == 0 ? values.erase(it) : std::next(it);
  return WeightSystem(n, std::move(values));
}

WeightSystem WeightSystem::dual(int n, const CanonicalDiagram& b) {
  std::map<std::string, std::pair<CanonicalDiagram, Rat>> values;
  values.emplace(b.enc, std::make_pair(b, Rat(1)));
  return WeightSystem(n, std::move(values));
}

json WeightSystem::toJson() const {
  json vals = json::array();
  for (const auto& [enc, dv] : values_) {
    json t;
    t["diagram"] = diagramToJson(dv.first.rep);
    ratToJson(t, dv.second);
    vals.push_back(std::move(t));
  }
  return json{{"n", n_}, {"defaultZero", true}, {"values", std::move(vals)}};
}

Rat WeightSystem::evaluate(const DiagramVector& v) const {
  Rat out = 0;
  for (const auto& [enc, tc] : v.terms()) {
    auto it = values_.find(enc);
    if (it != values_.end()) out += tc.second * it->second.second;
  }
  return out;
}

void WeightSystem::validate() const {
  for (const auto& [enc, dv] : values_)
    for (RelationKind kind : {RelationKind::STU, RelationKind::FI})
      for (const DiagramVector& inst :
           relationInstancesFor(dv.first, kind, true))
        if (evaluate(inst) != 0)
          throw Error(std::string("weight system violates a ") +
                      relationName(kind) + " relation: " +
                      vectorToJson(inst).dump());
}

Rat coefficient(const WeightSystem& w, const std::vector<int>& sigma,
                const std::vector<int>& sigmaPrime) {
  return w.evaluate(pairingElementRaw(w.n(), sigma, sigmaPrime));
}

QuadraticForm QuadraticForm::fromWeightSystem(const WeightSystem& w) {
  QuadraticForm form;
  form.n = w.n();
  form.perms = allPermutations(w.n() - 1);
  size_t k = form.perms.size();
  form.f.assign(k, std::vector<Rat>(k));
  for (size_t i = 0; i < k; ++i)
    for (size_t j = i; j < k; ++j) {
      form.f[i][j] = coefficient(w, form.perms[i], form.perms[j]);
      form.f[j][i] = form.f[i][j];
    }
  return form;
}

bool QuadraticForm::integerEntries() const {
  for (const auto& row : f)
    for (const Rat& x : row)
      if (x.get_den() != 1) return false;
  return true;
}

bool QuadraticForm::evenDiagonal() const {
  for (size_t i = 0; i < f.size(); ++i)
    if (f[i][i].get_den() != 1 || f[i][i].get_num() % 2 != 0) return false;
  return true;
}

Rat quadraticFormEval(const QuadraticForm& form, const std::vector<Rat>& mu) {
  if (mu.size() != form.perms.size())
    throw InputError("quadratic form and mu sizes differ");
  Rat out = 0;
  for (size_t i = 0; i < mu.size(); ++i)
    for (size_t j = 0; j < mu.size(); ++j)
      out += form.f[i][j] * mu[i] * mu[j];
  return out / 2;
}

json Report::toJson() const {
  json t = json::object();
  for (const auto& [stage, secs] : timings) t[stage] = secs;
  return json{{"suite", suite},
              {"parameters", parameters},
              {"status", status},
              {"witnesses", witnesses},
              {"timings", std::move(t)}};
}

// ---- verification suites --------------------------------------------------

Report verifyLeftInverse(int n) {
  if (n < 2) throw InputError("verifyLeftInverse needs n >= 2");
  Report rep;
  rep.suite = "leftInverse";
  rep.parameters = {{"n", n}};
  rep.status = "pass";

  auto t0 = Clock::now();
  EnumOptions eo;
  eo.connectedOnly = true;
  auto gens = enumerateDiagrams({emptySkeleton(), 0}, n - 1, eo);
  ContextOptions co;
  co.kinds = {RelationKind::AS, RelationKind::IHX};
  QuotientContext actx({emptySkeleton(), 0}, n - 1, co);
  rep.timings["context"] = seconds(t0);

  auto t1 = Clock::now();
  std::vector<int> cutA, cutB(n + 1, 1);  // two cut-point choices
  for (const auto& g : gens) {
    CanonResult ins = insertCircles(roundRobinPlacement(g.rep, n + 1));
    DiagramVector inserted = DiagramVector::single(ins.canon, ins.sign);
    std::vector<DiagramVector> results;
    for (const auto& rot : {cutA, cutB})
      results.push_back(projectConnected(
          joinPairs(pbwInverse(cutCircles(inserted, rot)), n)));
    DiagramVector target = DiagramVector::single(g);
    ReduceResult diff = actx.reduce(results[0] - target);
    ReduceResult cuts = actx.reduce(results[0] - results[1]);
    json w;
    w["generator"] = diagramToJson(g.rep);
    w["recovered"] = vectorToJson(results[0]);
    w["identityResidue"] = vectorToJson(diff.normal);
    w["cutPointResidue"] = vectorToJson(cuts.normal);
    rep.witnesses.push_back(std::move(w));
    if (!diff.normal.zero() || !diff.definitive || !cuts.normal.zero() ||
        !cuts.definitive)
      rep.status = "fail";
  }
  rep.timings["pipeline"] = seconds(t1);
  return rep;
}

Report verifyEvenness(int n, const std::vector<int>& sigma,
                      const QuotientContext* big) {
  checkPermutation(sigma, n - 1);
  Report rep;
  rep.suite = "evenness";
  rep.parameters = {{"n", n}, {"sigma", sigmaJson(sigma)}};

  auto t0 = Clock::now();
  std::optional<QuotientContext> local;
  if (!big) local.emplace(Space{circles(n + 1), 0}, 2 * n, ContextOptions{});
  const QuotientContext& ctx = big ? *big : *local;
  rep.timings["context"] = seconds(t0);

  auto t1 = Clock::now();
  DiagramVector v = pairingElement(n, sigma, sigma, ctx);
  rep.timings["pairing"] = seconds(t1);

  mpz_class den = v.commonDenominator();
  rep.parameters["clearedDenominator"] = den.get_str();
  if (den % 2 == 0) {
    rep.status = "inconclusive";
    json w;
    w["reason"] = "denominator not invertible modulo 2";
    w["vector"] = vectorToJson(v);
    rep.witnesses.push_back(std::move(w));
    return rep;
  }

  auto t2 = Clock::now();
  const auto& gens = ctx.generators();
  std::map<std::string, int> index;
  for (size_t i = 0; i < gens.size(); ++i) index[gens[i].enc] = (int)i;
  auto toRow = [&index](const DiagramVector& x, const mpz_class& scale) {
    IntRow row;
    for (const auto& [enc, tc] : x.terms()) {
      Rat c = tc.second * Rat(scale);
      if (c.get_den() != 1) throw Error("internal: uncleared denominator");
      row[index.at(enc)] = c.get_num();
    }
    return row;
  };

  IntegerLattice L((int)gens.size());
  for (size_t i = 0; i < gens.size(); ++i) L.addScaled({{(int)i, 1}});
  EnumOptions all;
  all.includeDegenerate = true;
  for (const auto& src : enumerateDiagrams(ctx.space(), ctx.degree(), all))
    for (RelationKind kind : ctx.kinds())
      for (const DiagramVector& inst : relationInstancesFor(src, kind))
        if (!inst.zero()) L.addFree(toRow(inst, inst.commonDenominator()));
  rep.timings["lattice"] = seconds(t2);

  auto t3 = Clock::now();
  auto res = L.divisibility(toRow(v, den), 2);
  rep.timings["divisibility"] = seconds(t3);
  if (res.divisible) {
    rep.status = "pass";
    DiagramVector witness;
    for (const auto& [i, c] : res.witness)
      witness.add(gens[i], Rat(c));
    json w;
    w["halfClass"] = vectorToJson(witness);
    w["note"] = "cleared vector = 2 * halfClass + integral relation part";
    rep.witnesses.push_back(std::move(w));
  } else {
    rep.status = "fail";
    json w;
    w["reason"] = "cleared vector not divisible by 2 modulo relations";
    w["vector"] = vectorToJson(v);
    rep.witnesses.push_back(std::move(w));
  }
  return rep;
}

Report verifyWheelVanishing(int n, const QuotientContext* big) {
  if (n != 2) throw InputError("verifyWheelVanishing is specified for n = 2");
  Report rep;
  rep.suite = "wheelVanishing";
  rep.parameters = {{"n", n}};
  rep.status = "pass";

  auto t0 = Clock::now();
  std::optional<QuotientContext> local;
  if (!big) local.emplace(Space{circles(3), 0}, 4, ContextOptions{});
  const QuotientContext& ctx = big ? *big : *local;
  rep.timings["context"] = seconds(t0);

  auto t1 = Clock::now();
  DiagramVector t;
  t.addRaw(treeRaw(2, {1}), 1);
  DiagramVector wheelPart = cable(DiagramVector::single(wheel(2)), 3);
  DiagramVector v = close(stack(chi(t, 3), wheelPart));
  ReduceResult main = ctx.reduce(v);
  json mw;
  mw["element"] = "close(stack(chi(tree), cable(wheel(2), 3)))";
  mw["normalForm"] = vectorToJson(main.normal);
  rep.witnesses.push_back(std::move(mw));
  if (!main.normal.zero() || !main.definitive) rep.status = "fail";
  rep.timings["main"] = seconds(t1);

  // Mechanism: every diagram with a one-leg circle whose leg runs to a
  // trivalent vertex dies in the quotient.
  auto t2 = Clock::now();
  int swept = 0;
  for (const auto& g : ctx.generators()) {
    const Diagram& d = g.rep;
    bool oneLeg = false;
    for (int c = 1; c <= d.skel.count && !oneLeg; ++c) {
      auto legs = legsOnComponent(d, c);
      oneLeg = legs.size() == 1 &&
               d.mate[3 * d.trivalent + legs[0]] < 3 * d.trivalent;
    }
    if (!oneLeg) continue;
    ++swept;
    ReduceResult r = ctx.reduce(DiagramVector::single(g));
    if (!r.normal.zero() || !r.definitive) {
      rep.status = "fail";
      json w;
      w["oneLegDiagram"] = diagramToJson(d);
      w["normalForm"] = vectorToJson(r.normal);
      rep.witnesses.push_back(std::move(w));
    }
  }
  rep.parameters["oneLegDiagramsSwept"] = swept;
  rep.timings["sweep"] = seconds(t2);

  // Control: the wheel factor alone (no one-leg circle) need not vanish.
  auto t3 = Clock::now();
  QuotientContext small({circles(3), 0}, 2, ContextOptions{});
  ReduceResult ctrl = small.reduce(close(wheelPart));
  json cw;
  cw["control"] = "close(cable(wheel(2), 3))";
  cw["normalForm"] = vectorToJson(ctrl.normal);
  rep.witnesses.push_back(std::move(cw));
  rep.timings["control"] = seconds(t3);
  return rep;
}

}  // namespace jd
