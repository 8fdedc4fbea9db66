#include "jd/context.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace jd {

std::string spaceName(const Space& s) {
  if (s.colors > 0) return "open" + std::to_string(s.colors);
  return skeletonName(s.skel);
}

Space spaceFromName(const std::string& name) {
  if (name == "empty") return {emptySkeleton(), 0};
  if (name.size() > 1 && (name[0] == 'C' || name[0] == 'I')) {
    int m = std::stoi(name.substr(1));
    return {name[0] == 'C' ? circles(m) : intervals(m), 0};
  }
  if (name.rfind("open", 0) == 0)
    return {emptySkeleton(), std::stoi(name.substr(4))};
  throw InputError("unknown space name: " + name);
}

static std::vector<RelationKind> normalizeKinds(std::vector<RelationKind> ks) {
  std::sort(ks.begin(), ks.end(),
            [](RelationKind a, RelationKind b) { return (int)a < (int)b; });
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
  if (ks.empty()) throw InputError("at least one relation kind is required");
  return ks;
}

QuotientContext::QuotientContext(const Space& space, int degree,
                                 const ContextOptions& opt)
    : space_(space), degree_(degree), mode_(opt.mode),
      kinds_(normalizeKinds(opt.kinds)) {
  if (mode_ == ContextMode::Saturation)
    throw InputError("saturation mode needs seed diagrams");
  EnumOptions eo;
  eo.budget = opt.budget;
  // Degenerate classes are zero as vectors, but their relation instances
  // still constrain the surviving classes (merging the two sole legs of a
  // symmetric diagram, say), so they are kept as relation sources.
  eo.includeDegenerate = true;
  std::vector<CanonicalDiagram> sources =
      enumerateDiagrams(space_, degree_, eo);
  for (const auto& c : sources)
    if (canonicalize(c.rep).sign != 0) gens_.push_back(c);
  for (size_t i = 0; i < gens_.size(); ++i) index_[gens_[i].enc] = (int)i;
  std::vector<DiagramVector> instances;
  for (const auto& g : sources)
    for (RelationKind k : kinds_)
      for (auto& r : relationInstancesFor(g, k)) instances.push_back(std::move(r));
  assemble(instances);
}

QuotientContext::QuotientContext(const Space& space, int degree,
                                 const std::vector<CanonicalDiagram>& seeds,
                                 const ContextOptions& opt)
    : space_(space), degree_(degree), mode_(opt.mode),
      kinds_(normalizeKinds(opt.kinds)) {
  if (mode_ == ContextMode::Full)
    throw InputError("full mode does not take seeds");
  build(seeds, opt.budget);
}

void QuotientContext::build(const std::vector<CanonicalDiagram>& seeds,
                            long long budget) {
  std::map<std::string, CanonicalDiagram> known;
  std::deque<CanonicalDiagram> queue;
  for (const auto& s : seeds) {
    if (s.degree() != degree_ || s.rep.skel != space_.skel ||
        s.rep.colors != space_.colors)
      throw InputError("seed diagram outside the context space");
    if (known.emplace(s.enc, s).second) queue.push_back(s);
  }
  bool exceeded = false;
  std::vector<DiagramVector> instances;
  while (!queue.empty()) {
    CanonicalDiagram d = queue.front();
    queue.pop_front();
    for (RelationKind k : kinds_) {
      for (auto& inst : relationInstancesFor(d, k, k == RelationKind::STU)) {
        std::vector<const CanonicalDiagram*> fresh;
        for (const auto& [enc, tc] : inst.terms())
          if (!known.count(enc)) fresh.push_back(&tc.first);
        if (!fresh.empty() &&
            (exceeded || (long long)(known.size() + fresh.size()) > budget)) {
          exceeded = true;  // keep the index frozen from here on
          continue;
        }
        for (const CanonicalDiagram* c : fresh) {
          known.emplace(c->enc, *c);
          queue.push_back(*c);
        }
        instances.push_back(inst);
      }
    }
  }
  status_ = exceeded ? ContextStatus::Budgeted : ContextStatus::Complete;
  for (auto& [enc, c] : known) gens_.push_back(c);
  for (size_t i = 0; i < gens_.size(); ++i) index_[gens_[i].enc] = (int)i;
  assemble(instances);
}

void QuotientContext::assemble(std::vector<DiagramVector>& instances) {
  std::vector<Row> rows;
  for (const auto& inst : instances) {
    Row r;
    for (const auto& [enc, tc] : inst.terms()) {
      auto it = index_.find(enc);
      if (it == index_.end())
        throw Error("internal: relation term outside the generator index: " +
                    enc);
      r.emplace_back(it->second, tc.second);
    }
    std::sort(r.begin(), r.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    Rat lead = r.front().second;
    for (auto& [col, val] : r) val /= lead;
    rows.push_back(std::move(r));
  }
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  for (const Row& row : rows) {
    Row r = reduceRow(row);
    if (r.empty()) continue;
    Rat lead = r.front().second;
    for (auto& [col, val] : r) val /= lead;
    pivots_[r.front().first] = std::move(r);
  }
}

QuotientContext::Row QuotientContext::reduceRow(const Row& r) const {
  std::map<int, Rat> w(r.begin(), r.end());
  auto it = w.begin();
  while (it != w.end()) {
    if (it->second == 0) {
      it = w.erase(it);
      continue;
    }
    auto p = pivots_.find(it->first);
    if (p == pivots_.end()) {
      ++it;
      continue;
    }
    Rat c = it->second;
    // The pivot row's leading column is it->first with coefficient 1, so the
    // subtraction only touches columns from here onward.
    for (const auto& [col, val] : p->second) w[col] -= c * val;
    it = w.erase(w.find(p->first));
  }
  Row out;
  for (const auto& [col, val] : w)
    if (val != 0) out.emplace_back(col, val);
  return out;
}

ReduceResult QuotientContext::reduce(const DiagramVector& v) const {
  Row r;
  std::string missing;
  for (const auto& [enc, tc] : v.terms()) {
    auto it = index_.find(enc);
    if (it == index_.end()) {
      missing += (missing.empty() ? "" : ", ") + enc;
      continue;
    }
    r.emplace_back(it->second, tc.second);
  }
  if (!missing.empty())
    throw Error("diagrams outside the generator index: " + missing);
  std::sort(r.begin(), r.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  ReduceResult out;
  for (const auto& [col, val] : reduceRow(r)) out.normal.add(gens_[col], val);
  out.definitive =
      mode_ == ContextMode::Full && status_ == ContextStatus::Complete;
  return out;
}

long long QuotientContext::dimension() const {
  if (mode_ != ContextMode::Full || status_ != ContextStatus::Complete)
    throw Error("dimension requires a complete full context");
  return (long long)gens_.size() - (long long)pivots_.size();
}

std::string contextKey(const Space& space, int degree,
                       const ContextOptions& opt) {
  std::string k = spaceName(space) + "|d" + std::to_string(degree) + "|";
  for (size_t i = 0; i < opt.kinds.size(); ++i)
    k += std::string(i ? "+" : "") + relationName(opt.kinds[i]);
  k += opt.mode == ContextMode::Full ? "|full" : "|sat";
  return k;
}

std::string QuotientContext::key() const {
  ContextOptions opt;
  opt.mode = mode_;
  opt.kinds = kinds_;
  return contextKey(space_, degree_, opt);
}

static std::string ratStr(const Rat& q) { return q.get_str(); }

static Rat ratParse(const std::string& s) {
  Rat q;
  if (q.set_str(s, 10) != 0) throw InputError("bad rational: " + s);
  q.canonicalize();
  return q;
}

std::string QuotientContext::writeText() const {
  std::ostringstream os;
  os << "jdctx 1\n";
  os << "space " << spaceName(space_) << "\n";
  os << "degree " << degree_ << "\n";
  os << "kinds";
  for (RelationKind k : kinds_) os << " " << relationName(k);
  os << "\n";
  os << "mode " << (mode_ == ContextMode::Full ? "full" : "saturation") << "\n";
  os << "status "
     << (status_ == ContextStatus::Complete ? "complete" : "budgeted") << "\n";
  os << "gens " << gens_.size() << "\n";
  for (const auto& g : gens_) os << g.enc << "\n";
  os << "rows " << pivots_.size() << "\n";
  for (const auto& [piv, row] : pivots_) {
    for (size_t i = 0; i < row.size(); ++i)
      os << (i ? " " : "") << row[i].first << ":" << ratStr(row[i].second);
    os << "\n";
  }
  os << "end\n";
  return os.str();
}

QuotientContext QuotientContext::readText(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  auto need = [&](const std::string& prefix) {
    if (!std::getline(is, line) || line.rfind(prefix, 0) != 0)
      throw InputError("context file: expected '" + prefix + "' line");
    return line.size() > prefix.size() + 1 ? line.substr(prefix.size() + 1)
                                           : std::string();
  };
  if (need("jdctx") != "1") throw InputError("context file: unknown version");
  QuotientContext ctx;
  Space sp = spaceFromName(need("space"));
  ctx.space_ = sp;
  ctx.degree_ = std::stoi(need("degree"));
  {
    std::istringstream ks(need("kinds"));
    std::string k;
    while (ks >> k) ctx.kinds_.push_back(relationFromName(k));
    ctx.kinds_ = normalizeKinds(ctx.kinds_);
  }
  std::string m = need("mode");
  if (m != "full" && m != "saturation")
    throw InputError("context file: bad mode " + m);
  ctx.mode_ = m == "full" ? ContextMode::Full : ContextMode::Saturation;
  std::string st = need("status");
  if (st != "complete" && st != "budgeted")
    throw InputError("context file: bad status " + st);
  ctx.status_ =
      st == "complete" ? ContextStatus::Complete : ContextStatus::Budgeted;
  long long n = std::stoll(need("gens"));
  for (long long i = 0; i < n; ++i) {
    if (!std::getline(is, line)) throw InputError("context file: truncated");
    CanonicalDiagram c = decodeEncoding(line);
    if (c.degree() != ctx.degree_ || c.rep.skel != sp.skel ||
        c.rep.colors != sp.colors)
      throw InputError("context file: generator outside the space: " + line);
    ctx.index_[c.enc] = (int)ctx.gens_.size();
    ctx.gens_.push_back(std::move(c));
  }
  long long r = std::stoll(need("rows"));
  for (long long i = 0; i < r; ++i) {
    if (!std::getline(is, line)) throw InputError("context file: truncated");
    std::istringstream rs(line);
    std::string tok;
    Row row;
    while (rs >> tok) {
      auto colon = tok.find(':');
      if (colon == std::string::npos)
        throw InputError("context file: bad row entry " + tok);
      int col = std::stoi(tok.substr(0, colon));
      if (col < 0 || col >= (int)ctx.gens_.size())
        throw InputError("context file: column out of range");
      row.emplace_back(col, ratParse(tok.substr(colon + 1)));
    }
    if (row.empty() || row.front().second != 1)
      throw InputError("context file: row must lead with coefficient 1");
    for (size_t j = 1; j < row.size(); ++j)
      if (row[j].first <= row[j - 1].first)
        throw InputError("context file: row columns not increasing");
    ctx.pivots_[row.front().first] = std::move(row);
  }
  if (need("end") != "") throw InputError("context file: trailing data");
  return ctx;
}

bool QuotientContext::selfCheck() const {
  if (mode_ == ContextMode::Full) {
    // Full contexts are cheap to rebuild from scratch (and the rebuild also
    // revisits the degenerate relation sources, which are not stored).
    ContextOptions o;
    o.mode = ContextMode::Full;
    o.kinds = kinds_;
    QuotientContext fresh(space_, degree_, o);
    return fresh.writeText() == writeText();
  }
  // Saturation: re-derive the instances from the stored generators and
  // check the stored matrix against a fresh elimination.
  std::vector<DiagramVector> instances;
  for (const auto& g : gens_) {
    for (RelationKind k : kinds_) {
      for (auto& inst :
           relationInstancesFor(g, k, k == RelationKind::STU)) {
        bool indexed = true;
        for (const auto& [enc, tc] : inst.terms())
          if (!index_.count(enc)) indexed = false;
        if (!indexed) {
          if (status_ == ContextStatus::Complete) return false;
          continue;  // budgeted contexts legitimately drop such instances
        }
        instances.push_back(std::move(inst));
      }
    }
  }
  QuotientContext fresh;
  fresh.space_ = space_;
  fresh.degree_ = degree_;
  fresh.mode_ = mode_;
  fresh.kinds_ = kinds_;
  fresh.gens_ = gens_;
  fresh.index_ = index_;
  fresh.assemble(instances);
  return fresh.pivots_ == pivots_;
}

}  // namespace jd
