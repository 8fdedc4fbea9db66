#include "jd/json_io.hpp"

#include <fstream>

namespace jd {

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& what) {
  throw InputError(path + ": " + what);
}

int intField(const json& j, const char* key, const std::string& path) {
  if (!j.contains(key)) bad(path, std::string("missing field \"") + key + "\"");
  const json& v = j.at(key);
  if (!v.is_number_integer()) bad(path + "." + key, "expected integer");
  return v.get<int>();
}

}  // namespace

json diagramToJson(const Diagram& d) {
  json j;
  const char* kind = d.skel.kind == SkeletonKind::Empty      ? "empty"
                     : d.skel.kind == SkeletonKind::Circles ? "circles"
                                                            : "intervals";
  j["skeleton"] = {{"kind", kind}, {"count", d.skel.count}};
  if (d.colors > 0) j["colors"] = d.colors;
  j["trivalent"] = d.trivalent;
  json legs = json::array();
  for (const Leg& l : d.legs) {
    if (d.skel.kind == SkeletonKind::Empty)
      legs.push_back({{"color", l.color}});
    else
      legs.push_back({{"component", l.component}, {"position", l.position}});
  }
  j["legs"] = std::move(legs);
  json edges = json::array();
  for (int h = 0; h < d.halfEdges(); ++h)
    if (d.mate[h] > h) edges.push_back({h, d.mate[h]});
  j["edges"] = std::move(edges);
  return j;
}

Diagram diagramFromJson(const json& j, const std::string& path) {
  if (!j.is_object()) bad(path, "expected object");
  Diagram d;
  if (!j.contains("skeleton")) bad(path, "missing field \"skeleton\"");
  const json& sk = j.at("skeleton");
  if (!sk.is_object()) bad(path + ".skeleton", "expected object");
  if (!sk.contains("kind") || !sk.at("kind").is_string())
    bad(path + ".skeleton.kind", "expected string");
  std::string kind = sk.at("kind").get<std::string>();
  if (kind == "empty")
    d.skel.kind = SkeletonKind::Empty;
  else if (kind == "circles")
    d.skel.kind = SkeletonKind::Circles;
  else if (kind == "intervals")
    d.skel.kind = SkeletonKind::Intervals;
  else
    bad(path + ".skeleton.kind", "unknown kind \"" + kind + "\"");
  d.skel.count = intField(sk, "count", path + ".skeleton");

  if (j.contains("colors")) {
    if (d.skel.kind != SkeletonKind::Empty)
      bad(path + ".colors", "colors require skeleton kind \"empty\"");
    if (!j.at("colors").is_number_integer())
      bad(path + ".colors", "expected integer");
    d.colors = j.at("colors").get<int>();
  }
  d.trivalent = intField(j, "trivalent", path);

  if (!j.contains("legs") || !j.at("legs").is_array())
    bad(path + ".legs", "expected array");
  int idx = 0;
  for (const json& lj : j.at("legs")) {
    std::string lp = path + ".legs[" + std::to_string(idx++) + "]";
    if (!lj.is_object()) bad(lp, "expected object");
    Leg l;
    if (lj.contains("color")) {
      l.color = intField(lj, "color", lp);
    } else {
      l.component = intField(lj, "component", lp);
      l.position = intField(lj, "position", lp);
    }
    d.legs.push_back(l);
  }

  if (!j.contains("edges") || !j.at("edges").is_array())
    bad(path + ".edges", "expected array");
  d.mate.assign(d.halfEdges(), -1);
  idx = 0;
  for (const json& ej : j.at("edges")) {
    std::string ep = path + ".edges[" + std::to_string(idx++) + "]";
    if (!ej.is_array() || ej.size() != 2 || !ej[0].is_number_integer() ||
        !ej[1].is_number_integer())
      bad(ep, "expected pair of half-edge ids");
    int a = ej[0].get<int>(), b = ej[1].get<int>();
    if (a < 0 || a >= d.halfEdges() || b < 0 || b >= d.halfEdges())
      bad(ep, "half-edge id out of range");
    if (d.mate[a] != -1 || d.mate[b] != -1) bad(ep, "half-edge matched twice");
    d.mate[a] = b;
    d.mate[b] = a;
  }
  for (int h = 0; h < d.halfEdges(); ++h)
    if (d.mate[h] == -1)
      bad(path + ".edges", "half-edge " + std::to_string(h) + " unmatched");
  try {
    validate(d);
  } catch (const ValidationError& e) {
    bad(path, e.what());
  }
  return d;
}

Rat ratFromJson(const json& term, const std::string& path) {
  if (!term.contains("num") || !term.at("num").is_string())
    bad(path + ".num", "expected string");
  if (!term.contains("den") || !term.at("den").is_string())
    bad(path + ".den", "expected string");
  mpz_class num, den;
  try {
    num = mpz_class(term.at("num").get<std::string>());
    den = mpz_class(term.at("den").get<std::string>());
  } catch (const std::invalid_argument&) {
    bad(path, "malformed integer literal");
  }
  if (den == 0) bad(path + ".den", "zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

void ratToJson(json& term, const Rat& q) {
  Rat c = q;
  c.canonicalize();  // callers may hold unreduced fractions
  term["num"] = c.get_num().get_str();
  term["den"] = c.get_den().get_str();
}

json vectorToJson(const DiagramVector& v) {
  json terms = json::array();
  for (const auto& [enc, tc] : v.terms()) {
    json t;
    t["diagram"] = diagramToJson(tc.first.rep);
    ratToJson(t, tc.second);
    terms.push_back(std::move(t));
  }
  return json{{"terms", std::move(terms)}};
}

DiagramVector vectorFromJson(const json& j, const std::string& path) {
  if (!j.is_object() || !j.contains("terms") || !j.at("terms").is_array())
    bad(path + ".terms", "expected array");
  DiagramVector v;
  int idx = 0;
  for (const json& t : j.at("terms")) {
    std::string tp = path + ".terms[" + std::to_string(idx++) + "]";
    if (!t.is_object() || !t.contains("diagram"))
      bad(tp, "expected object with \"diagram\"");
    Diagram d = diagramFromJson(t.at("diagram"), tp + ".diagram");
    v.addRaw(d, ratFromJson(t, tp));
  }
  return v;
}

json parseJsonFile(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw InputError(file + ": cannot open");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw InputError(file + ": " + e.what());
  }
  return j;
}

}  // namespace jd
