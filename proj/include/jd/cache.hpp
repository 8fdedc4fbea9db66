#ifndef JD_CACHE_HPP
#define JD_CACHE_HPP

#include <optional>
#include <string>
#include <vector>

namespace jd {

// Filesystem cache of computed payloads (context matrices, reports). One
// file per entry, named by operation and parameter digest; the header
// carries a payload digest so corruption is detectable. Writes go through a
// temporary file and a rename. An empty directory disables the cache.
class Cache {
 public:
  explicit Cache(std::string dir);
  // Resolves dir from the flag value or the JD_CACHE_DIR environment.
  static Cache resolve(const std::string& flagValue);

  bool enabled() const { return !dir_.empty(); }
  const std::string& dir() const { return dir_; }

  std::optional<std::string> load(const std::string& op,
                                  const std::string& params) const;
  void store(const std::string& op, const std::string& params,
             const std::string& payload) const;

  std::vector<std::string> list() const;  // entry file names, sorted
  int clear() const;                      // returns removed count
  // Digest-checks every entry; removes and returns the corrupt ones.
  std::vector<std::string> verify() const;

  static std::string digest(const std::string& s);

 private:
  std::string fileFor(const std::string& op, const std::string& params) const;
  std::string dir_;
};

}  // namespace jd

#endif
