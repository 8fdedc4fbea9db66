#ifndef JD_JSON_IO_HPP
#define JD_JSON_IO_HPP

#include <string>

#include "json.hpp"
#include "jd/vector.hpp"

namespace jd {

using nlohmann::json;

// Bit-exact interchange format:
// { "skeleton": {"kind": "circles"|"intervals"|"empty", "count": m},
//   "colors": m'            (open diagrams only),
//   "trivalent": T,
//   "legs": [ {"component": i, "position": p} | {"color": c}, ... ],
//   "edges": [ [h1, h2], ... ] }
json diagramToJson(const Diagram& d);
Diagram diagramFromJson(const json& j, const std::string& path = "$");

// {"terms": [{"diagram": <diagram JSON>, "num": "...", "den": "..."}]}
json vectorToJson(const DiagramVector& v);
DiagramVector vectorFromJson(const json& j, const std::string& path = "$");

Rat ratFromJson(const json& term, const std::string& path);
void ratToJson(json& term, const Rat& q);

json parseJsonFile(const std::string& file);

}  // namespace jd

#endif
