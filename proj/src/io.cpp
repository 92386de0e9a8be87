#include "polyslice/io.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "polyslice/errors.hpp"

namespace polyslice {

Json to_json(const RVector& v) {
  Json a = Json::array();
  for (const auto& c : v) a.push_back(to_string(c));
  return a;
}

RVector vector_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("expected an array of rationals");
  std::vector<Rational> coords;
  for (const auto& c : j) {
    if (c.is_string()) {
      coords.push_back(parse_rational(c.get<std::string>()));
    } else if (c.is_number_integer()) {
      coords.emplace_back(c.get<long>());
    } else {
      throw InputError("rational must be a \"p/q\" string or an integer");
    }
  }
  return RVector(std::move(coords));
}

namespace {

Json edges_json(const std::vector<Edge>& edges) {
  Json a = Json::array();
  for (auto [i, j] : edges) a.push_back({i, j});
  return a;
}

Json geometry_json(const VPolytope& p) {
  Json j;
  j["dim"] = p.dim();
  Json vs = Json::array();
  for (const auto& v : p.vertices()) vs.push_back(to_json(v));
  j["vertices"] = vs;
  j["edges"] = edges_json(p.edges());
  return j;
}

template <typename T>
T field(const Json& j, const char* key) {
  if (!j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw InputError(std::string("field \"") + key + "\" has the wrong type");
  }
}

Json counts_json(const CountSet& s) {
  Json a = Json::array();
  for (long c : s) a.push_back(c);
  return a;
}

}  // namespace

Json to_json(const VPolytope& p) {
  Json j = geometry_json(p);
  j["name"] = p.name();
  if (p.facets()) {
    Json fs = Json::array();
    for (const auto& f : *p.facets()) fs.push_back(f);
    j["facets"] = fs;
  }
  return j;
}

VPolytope polytope_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("polytope JSON must be an object");
  const auto dim = field<std::size_t>(j, "dim");
  if (!j.contains("vertices") || !j["vertices"].is_array()) throw InputError("missing \"vertices\" array");
  std::vector<RVector> vertices;
  for (const auto& v : j["vertices"]) vertices.push_back(vector_from_json(v));
  std::vector<Edge> edges;
  if (!j.contains("edges") || !j["edges"].is_array()) throw InputError("missing \"edges\" array");
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2) throw InputError("edge must be a pair of indices");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  std::optional<std::vector<Facet>> facets;
  if (j.contains("facets") && !j["facets"].is_null()) {
    facets = field<std::vector<Facet>>(j, "facets");
  }
  std::string name = j.contains("name") ? field<std::string>(j, "name") : std::string("polytope");
  return VPolytope(std::move(name), dim, std::move(vertices), std::move(edges), std::move(facets));
}

Json to_json(const VSSReport& r) {
  Json j;
  j["polytope"] = {{"name", r.polytope}, {"hash", r.polytope_hash}};
  j["realized"] = counts_json(r.realized);
  j["nu"] = r.nu;
  j["gaps"] = counts_json(r.gaps);
  Json w = Json::object();
  for (const auto& [count, wit] : r.witnesses) {
    w[std::to_string(count)] = {{"direction", to_json(wit.direction)}, {"offset", to_string(wit.offset)}};
  }
  j["witnesses"] = w;
  j["generator"] = r.generator;
  j["exhaustive"] = r.exhaustive;
  return j;
}

VSSReport report_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("report JSON must be an object");
  VSSReport r;
  const Json& p = j.at("polytope");
  r.polytope = field<std::string>(p, "name");
  r.polytope_hash = field<std::string>(p, "hash");
  for (long c : field<std::vector<long>>(j, "realized")) r.realized.insert(c);
  r.nu = field<long>(j, "nu");
  for (long c : field<std::vector<long>>(j, "gaps")) r.gaps.insert(c);
  if (j.contains("witnesses")) {
    for (const auto& [key, w] : j["witnesses"].items()) {
      long count = 0;
      try {
        count = std::stol(key);
      } catch (const std::exception&) {
        throw InputError("witness key is not an integer: " + key);
      }
      r.witnesses[count] = Witness{vector_from_json(w.at("direction")), parse_rational(field<std::string>(w, "offset"))};
    }
  }
  r.generator = field<std::string>(j, "generator");
  r.exhaustive = field<bool>(j, "exhaustive");
  return r;
}

Json to_json(const SweepProfile& s) {
  Json levels = Json::array();
  for (const auto& l : s.levels) levels.push_back(to_string(l));
  return {{"direction", to_json(s.direction)},
          {"levels", levels},
          {"at_level", s.at_level},
          {"between", s.between}};
}

Json to_json(const SlicePartition& s) {
  return {{"below", s.below},         {"on", s.on},          {"above", s.above},
          {"crossed", edges_json(s.crossed)}, {"cv", s.count()}};
}

std::string content_hash(const VPolytope& p) {
  const std::string text = geometry_json(p).dump();
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string report_csv(const VSSReport& r) {
  std::ostringstream out;
  out << "count,direction,offset\n";
  for (const auto& [count, w] : r.witnesses) {
    out << count << ',';
    for (std::size_t i = 0; i < w.direction.dim(); ++i) out << (i ? " " : "") << to_string(w.direction[i]);
    out << ',' << to_string(w.offset) << '\n';
  }
  return out.str();
}

RVector parse_direction(const std::string& text) {
  std::vector<Rational> coords;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw InputError("empty coordinate in direction \"" + text + "\"");
    coords.push_back(parse_rational(item.substr(b, e - b + 1)));
  }
  if (coords.empty()) throw InputError("empty direction");
  return RVector(std::move(coords));
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace polyslice
