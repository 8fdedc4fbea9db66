// jd: exact diagram-algebra workbench. Subcommands compute quotient
// dimensions, reduce vectors to normal form, build pairing elements, and run
// the verification suites. Exit codes: 0 success, 1 verification failure,
// 2 budget exhausted, 3 bad input.
#include <CLI11.hpp>
#include <iostream>
#include <optional>

#include "jd/cache.hpp"
#include "jd/context.hpp"
#include "jd/json_io.hpp"
#include "jd/maps.hpp"
#include "jd/theorem.hpp"

using namespace jd;

namespace {

struct Common {
  std::string cacheDir;
  std::string out = "json";
  int workers = 1;
  long long budget = 200'000'000;
};

void addCommon(CLI::App* cmd, Common* c) {
  cmd->add_option("--cache-dir", c->cacheDir,
                  "cache directory (default: $JD_CACHE_DIR)");
  cmd->add_option("--out", c->out, "output format")
      ->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--workers", c->workers, "worker count")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--budget-diagrams", c->budget,
                  "max candidate diagrams per enumeration")
      ->check(CLI::PositiveNumber);
}

void emit(const json& j, const Common& c) {
  if (c.out == "json") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  for (const auto& [k, v] : j.items())
    std::cout << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump())
              << "\n";
}

std::vector<int> parseSigma(const std::string& s, int n) {
  std::vector<int> out;
  for (char c : s) {
    if (c < '1' || c > '9') throw InputError("sigma must be digits, like 231");
    out.push_back(c - '0');
  }
  if ((int)out.size() != n - 1)
    throw InputError("sigma must list the images of 1.." +
                     std::to_string(n - 1));
  return out;
}

std::vector<int> identity(int k) {
  std::vector<int> out(k);
  for (int i = 0; i < k; ++i) out[i] = i + 1;
  return out;
}

// Default relation kinds: STU+FI on a skeleton, AS+IHX otherwise.
std::vector<RelationKind> kindsFor(const Space& sp) {
  if (sp.skel.kind == SkeletonKind::Empty)
    return {RelationKind::AS, RelationKind::IHX};
  return {RelationKind::STU, RelationKind::FI};
}

QuotientContext obtainContext(const Space& sp, int degree,
                              const ContextOptions& co, const Cache& cache) {
  std::string params = contextKey(sp, degree, co);
  if (auto payload = cache.load("context", params)) {
    try {
      QuotientContext ctx = QuotientContext::readText(*payload);
      if (ctx.key() == params) return ctx;
    } catch (const Error&) {
      // fall through to a rebuild; verify() prunes bad files
    }
  }
  QuotientContext ctx(sp, degree, co);
  if (ctx.status() == ContextStatus::Complete)
    cache.store("context", params, ctx.writeText());
  return ctx;
}

// Rank of the span of the given generators inside the quotient.
long long spanRank(const QuotientContext& ctx,
                   const std::vector<CanonicalDiagram>& gens) {
  std::map<std::string, DiagramVector> pivots;
  long long rank = 0;
  for (const auto& g : gens) {
    DiagramVector v = ctx.reduce(DiagramVector::single(g)).normal;
    while (!v.zero()) {
      auto lead = v.terms().begin();
      auto it = pivots.find(lead->first);
      if (it == pivots.end()) {
        v *= Rat(1) / lead->second.second;
        pivots.emplace(lead->first, std::move(v));
        ++rank;
        break;
      }
      v -= lead->second.second * it->second;
    }
  }
  return rank;
}

int cmdDims(const Common& c, const std::string& skeleton, int degree,
            bool connected, bool trivalent) {
  Space sp = spaceFromName(skeleton);
  ContextOptions co;
  co.kinds = kindsFor(sp);
  co.budget = c.budget;
  Cache cache = Cache::resolve(c.cacheDir);
  QuotientContext ctx = obtainContext(sp, degree, co, cache);

  json out;
  out["space"] = spaceName(sp);
  out["degree"] = degree;
  json kinds = json::array();
  for (RelationKind k : co.kinds) kinds.push_back(relationName(k));
  out["relations"] = std::move(kinds);
  out["status"] =
      ctx.status() == ContextStatus::Complete ? "complete" : "budgeted";
  long long dim;
  if (connected || trivalent) {
    EnumOptions eo;
    eo.connectedOnly = connected;
    eo.trivalentOnly = trivalent;
    eo.budget = c.budget;
    dim = spanRank(ctx, enumerateDiagrams(sp, degree, eo));
    out["restriction"] = std::string(connected ? "connected " : "") +
                         (trivalent ? "trivalent" : "");
  } else {
    dim = ctx.dimension();
    out["generators"] = (json::number_unsigned_t)ctx.generators().size();
    out["rank"] = (json::number_unsigned_t)ctx.rank();
  }
  out["dimension"] = dim;
  emit(out, c);
  return ctx.status() == ContextStatus::Complete ? 0 : 2;
}

int cmdReduce(const Common& c, const std::string& input,
              const std::string& skeleton, int degree) {
  Space sp = spaceFromName(skeleton);
  ContextOptions co;
  co.kinds = kindsFor(sp);
  co.budget = c.budget;
  Cache cache = Cache::resolve(c.cacheDir);
  QuotientContext ctx = obtainContext(sp, degree, co, cache);
  DiagramVector v = vectorFromJson(parseJsonFile(input), "$");
  ReduceResult r = ctx.reduce(v);
  json out;
  out["context"] = ctx.key();
  out["normal"] = vectorToJson(r.normal);
  out["definitive"] = r.definitive;
  emit(out, c);
  return 0;
}

int cmdPairing(const Common& c, int n, const std::string& sigmaStr,
               const std::string& sigma2Str, const std::string& weightsFile) {
  std::vector<int> sigma = parseSigma(sigmaStr, n);
  std::vector<int> sigma2 =
      sigma2Str.empty() ? sigma : parseSigma(sigma2Str, n);
  Cache cache = Cache::resolve(c.cacheDir);
  std::string params = "n" + std::to_string(n) + "|" + sigmaStr + "|" +
                       (sigma2Str.empty() ? sigmaStr : sigma2Str) + "|" +
                       (weightsFile.empty() ? "-" : weightsFile) + "|" + c.out;
  if (auto hit = cache.load("pairing", params)) {
    std::cout << *hit;
    return 0;
  }

  json out;
  out["n"] = n;
  out["sigma"] = sigmaStr;
  out["sigma2"] = sigma2Str.empty() ? sigmaStr : sigma2Str;
  DiagramVector raw = pairingElementRaw(n, sigma, sigma2);
  out["element"] = vectorToJson(raw);
  if (n == 2) {
    ContextOptions co;
    co.budget = c.budget;
    QuotientContext ctx =
        obtainContext({circles(n + 1), 0}, 2 * n, co, cache);
    out["context"] = ctx.key();
    ReduceResult r = ctx.reduce(raw);
    out["normalForm"] = vectorToJson(r.normal);
    out["definitive"] = r.definitive;
  }
  if (!weightsFile.empty()) {
    WeightSystem w = WeightSystem::fromJson(parseJsonFile(weightsFile));
    if (w.n() != n) throw InputError("weight system is for a different n");
    w.validate();
    json coeff;
    ratToJson(coeff, w.evaluate(raw));
    out["coefficient"] = std::move(coeff);
  }

  std::ostringstream buf;
  {
    std::streambuf* old = std::cout.rdbuf(buf.rdbuf());
    emit(out, c);
    std::cout.rdbuf(old);
  }
  cache.store("pairing", params, buf.str());
  std::cout << buf.str();
  return 0;
}

int cmdVerify(const Common& c, const std::string& suite, int n,
              const std::string& sigmaStr) {
  Cache cache = Cache::resolve(c.cacheDir);
  Report rep;
  if (suite == "prop21") {
    rep = verifyLeftInverse(n);
  } else if (suite == "evenness" || suite == "wheels") {
    if (n != 2)
      throw InputError(suite + " runs at n = 2 (desk scale)");
    ContextOptions co;
    co.budget = c.budget;
    QuotientContext big = obtainContext({circles(3), 0}, 4, co, cache);
    rep = suite == "evenness"
              ? verifyEvenness(
                    2, sigmaStr.empty() ? identity(1) : parseSigma(sigmaStr, 2),
                    &big)
              : verifyWheelVanishing(2, &big);
  } else {
    throw InputError("unknown suite: " + suite +
                     " (expected prop21, evenness, or wheels)");
  }
  emit(rep.toJson(), c);
  return rep.status == "fail" ? 1 : 0;
}

int cmdCache(const Common& c, const std::string& action) {
  Cache cache = Cache::resolve(c.cacheDir);
  if (!cache.enabled())
    throw InputError("no cache directory (use --cache-dir or JD_CACHE_DIR)");
  json out;
  if (action == "list") {
    out["entries"] = cache.list();
  } else if (action == "clear") {
    out["removed"] = cache.clear();
  } else if (action == "verify") {
    out["corrupt"] = cache.verify();
  } else {
    throw InputError("unknown cache action: " + action);
  }
  emit(out, c);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact workbench for unitrivalent diagram algebra"};
  app.require_subcommand(1);
  Common c;

  std::string skeleton, input, sigmaStr, sigma2Str, weightsFile, suite, action;
  int degree = 0, n = 2;
  bool connected = false, trivalent = false;

  CLI::App* dims = app.add_subcommand("dims", "dimension of a quotient space");
  dims->add_option("--skeleton", skeleton, "empty, C<m>, I<m>, or open<m>")
      ->required();
  dims->add_option("--degree", degree)->required()->check(CLI::NonNegativeNumber);
  dims->add_flag("--connected", connected, "span of connected diagrams only");
  dims->add_flag("--trivalent", trivalent, "span of legless diagrams only");
  addCommon(dims, &c);

  CLI::App* reduce = app.add_subcommand("reduce", "normal form of a vector");
  reduce->add_option("--input", input, "vector JSON file")->required();
  reduce->add_option("--skeleton", skeleton)->required();
  reduce->add_option("--degree", degree)->required()->check(
      CLI::NonNegativeNumber);
  addCommon(reduce, &c);

  CLI::App* pairing = app.add_subcommand("pairing", "pairing element");
  pairing->add_option("--n", n)->required()->check(CLI::Range(2, 9));
  pairing->add_option("--sigma", sigmaStr, "one-line images, like 231")
      ->required();
  pairing->add_option("--sigma2", sigma2Str, "second permutation (default: sigma)");
  pairing->add_option("--weights", weightsFile, "weight system JSON file");
  addCommon(pairing, &c);

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "prop21, evenness, or wheels")->required();
  verify->add_option("--n", n)->check(CLI::Range(2, 9));
  verify->add_option("--sigma", sigmaStr);
  addCommon(verify, &c);

  CLI::App* cacheCmd = app.add_subcommand("cache", "cache maintenance");
  cacheCmd->add_option("action", action, "list, clear, or verify")->required();
  addCommon(cacheCmd, &c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 3;
  }

  try {
    if (dims->parsed()) return cmdDims(c, skeleton, degree, connected, trivalent);
    if (reduce->parsed()) return cmdReduce(c, input, skeleton, degree);
    if (pairing->parsed())
      return cmdPairing(c, n, sigmaStr, sigma2Str, weightsFile);
    if (verify->parsed()) return cmdVerify(c, suite, n, sigmaStr);
    if (cacheCmd->parsed()) return cmdCache(c, action);
  } catch (const BudgetError& e) {
    std::cerr << "budget: " << e.what() << "\n";
    return 2;
  } catch (const InputError& e) {
    std::cerr << "input: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 3;
}
