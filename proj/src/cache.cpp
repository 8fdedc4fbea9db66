#include "jd/cache.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "jd/diagram.hpp"

namespace fs = std::filesystem;

namespace jd {

namespace {

constexpr const char* kMagic = "jdcache 1";

std::string fnv(const std::string& s, unsigned long long seed) {
  unsigned long long h = seed;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream out;
  out << std::hex << h;
  return out.str();
}

// Header line: "jdcache 1 <op> <paramDigest> <payloadDigest>".
bool parseHeader(const std::string& line, std::string* op,
                 std::string* paramDigest, std::string* payloadDigest) {
  std::istringstream in(line);
  std::string magic, version;
  return (in >> magic >> version >> *op >> *paramDigest >> *payloadDigest) &&
         magic + " " + version == kMagic;
}

}  // namespace

Cache::Cache(std::string dir) : dir_(std::move(dir)) {
  if (!dir_.empty()) fs::create_directories(dir_);
}

Cache Cache::resolve(const std::string& flagValue) {
  if (!flagValue.empty()) return Cache(flagValue);
  const char* env = std::getenv("JD_CACHE_DIR");
  return Cache(env ? env : "");
}

std::string Cache::digest(const std::string& s) {
  return fnv(s, 14695981039346656037ULL) + fnv(s, 0x9e3779b97f4a7c15ULL);
}

std::string Cache::fileFor(const std::string& op,
                           const std::string& params) const {
  return (fs::path(dir_) / (op + "-" + digest(params) + ".jdc")).string();
}

std::optional<std::string> Cache::load(const std::string& op,
                                       const std::string& params) const {
  if (!enabled()) return std::nullopt;
  std::ifstream in(fileFor(op, params), std::ios::binary);
  if (!in) return std::nullopt;
  std::string header;
  if (!std::getline(in, header)) return std::nullopt;
  std::string fileOp, paramDigest, payloadDigest;
  if (!parseHeader(header, &fileOp, &paramDigest, &payloadDigest) ||
      fileOp != op || paramDigest != digest(params))
    return std::nullopt;
  std::ostringstream payload;
  payload << in.rdbuf();
  if (digest(payload.str()) != payloadDigest) return std::nullopt;
  return payload.str();
}

void Cache::store(const std::string& op, const std::string& params,
                  const std::string& payload) const {
  if (!enabled()) return;
  static std::mt19937_64 rng(std::random_device{}());
  fs::path tmp = fs::path(dir_) / ("tmp-" + std::to_string(rng()));
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw Error("cache: cannot write " + tmp.string());
    out << kMagic << " " << op << " " << digest(params) << " "
        << digest(payload) << "\n"
        << payload;
  }
  fs::rename(tmp, fileFor(op, params));
}

std::vector<std::string> Cache::list() const {
  std::vector<std::string> out;
  if (!enabled() || !fs::exists(dir_)) return out;
  for (const auto& e : fs::directory_iterator(dir_))
    if (e.path().extension() == ".jdc")
      out.push_back(e.path().filename().string());
  std::sort(out.begin(), out.end());
  return out;
}

int Cache::clear() const {
  int removed = 0;
  for (const std::string& name : list()) {
    fs::remove(fs::path(dir_) / name);
    ++removed;
  }
  return removed;
}

std::vector<std::string> Cache::verify() const {
  std::vector<std::string> corrupt;
  for (const std::string& name : list()) {
    fs::path p = fs::path(dir_) / name;
    std::ifstream in(p, std::ios::binary);
    std::string header, fileOp, paramDigest, payloadDigest;
    bool ok = bool(std::getline(in, header)) &&
              parseHeader(header, &fileOp, &paramDigest, &payloadDigest);
    if (ok) {
      std::ostringstream payload;
      payload << in.rdbuf();
      ok = digest(payload.str()) == payloadDigest;
    }
    if (!ok) {
      corrupt.push_back(name);
      fs::remove(p);  // schedule rebuild on next use
    }
  }
  return corrupt;
}

}  // namespace jd
