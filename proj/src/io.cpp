#include "linelab/io.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "linelab/graph6.hpp"

namespace linelab {

namespace {

Rat rat_from_json(const json& v, const std::string& what) {
  if (v.is_number_integer()) return rat_parse(std::to_string(v.get<long long>()));
  if (v.is_string()) return rat_parse(v.get<std::string>());
  throw std::runtime_error(what + ": expected an integer or a \"p/q\" string");
}

int int_field(const json& j, const std::string& key, const std::string& what) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_number_integer())
    throw std::runtime_error(what + ": missing integer field \"" + key + "\"");
  return j.at(key).get<int>();
}

const json& array_field(const json& j, const std::string& key, const std::string& what) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_array())
    throw std::runtime_error(what + ": missing array field \"" + key + "\"");
  return j.at(key);
}

std::array<int, 3> triple_from_json(const json& t, const std::string& what) {
  if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer() ||
      !t[1].is_number_integer() || !t[2].is_number_integer())
    throw std::runtime_error(what + ": each triple must be three integers");
  return {t[0].get<int>(), t[1].get<int>(), t[2].get<int>()};
}

std::vector<int> mask_to_list(uint64_t m) {
  std::vector<int> out;
  for (int v = 0; v < 64; ++v)
    if ((m >> v) & 1) out.push_back(v);
  return out;
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json load_json(const std::string& path) {
  std::string text = read_file(path);
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

// --- instances ---------------------------------------------------------------------

json to_json(const MetricSpace& m) {
  json d = json::array();
  for (const Rat& q : m.d) d.push_back(rat_str(q));
  return json{{"n", m.n}, {"d", d}};
}

MetricSpace metric_space_from_json(const json& j) {
  const std::string what = "metric space";
  int n = int_field(j, "n", what);
  if (n < 1) throw std::runtime_error(what + ": need n >= 1");
  const json& d = array_field(j, "d", what);
  if (d.size() != static_cast<size_t>(n) * n)
    throw std::runtime_error(what + ": \"d\" must hold n*n row-major entries");
  MetricSpace m(n);
  for (size_t i = 0; i < d.size(); ++i) m.d[i] = rat_from_json(d[i], what);
  return m;
}

json to_json(const TernaryRelation& r) {
  json ts = json::array();
  for (const auto& t : r.triples) ts.push_back(json::array({t[0], t[1], t[2]}));
  return json{{"n", r.n}, {"triples", ts}};
}

TernaryRelation ternary_relation_from_json(const json& j) {
  const std::string what = "ternary relation";
  int n = int_field(j, "n", what);
  std::vector<std::array<int, 3>> ts;
  for (const json& t : array_field(j, "triples", what)) ts.push_back(triple_from_json(t, what));
  return TernaryRelation::make(n, std::move(ts));
}

json to_json(const Hypergraph3& h) {
  json ts = json::array();
  for (const auto& t : h.triples) ts.push_back(json::array({t[0], t[1], t[2]}));
  return json{{"n", h.n}, {"triples", ts}};
}

Hypergraph3 hypergraph_from_json(const json& j) {
  const std::string what = "hypergraph";
  int n = int_field(j, "n", what);
  std::vector<std::array<int, 3>> ts;
  for (const json& t : array_field(j, "triples", what)) ts.push_back(triple_from_json(t, what));
  return Hypergraph3::make(n, std::move(ts));
}

json to_json(const LineMap& f) {
  json map = json::object();
  for (int u = 0; u < f.n; ++u)
    for (int v = u + 1; v < f.n; ++v)
      map[std::to_string(u) + "," + std::to_string(v)] = mask_to_list(f.at(u, v));
  return json{{"n", f.n}, {"map", map}};
}

LineMap line_map_from_json(const json& j) {
  const std::string what = "line map";
  int n = int_field(j, "n", what);
  if (n < 2 || n > kMaxVertices) throw std::runtime_error(what + ": n out of range");
  if (!j.contains("map") || !j.at("map").is_object())
    throw std::runtime_error(what + ": missing object field \"map\"");
  LineMap f;
  f.n = n;
  f.sets.assign(static_cast<size_t>(n) * (n - 1) / 2, 0);
  std::vector<bool> seen(f.sets.size(), false);
  for (const auto& [key, members] : j.at("map").items()) {
    int u = -1, v = -1;
    char comma = 0;
    std::istringstream ks(key);
    if (!(ks >> u >> comma >> v) || comma != ',' || !(ks >> std::ws).eof())
      throw std::runtime_error(what + ": bad pair key \"" + key + "\"");
    if (u < 0 || v < 0 || u >= n || v >= n || u >= v)
      throw std::runtime_error(what + ": pair key \"" + key + "\" needs 0 <= u < v < n");
    if (!members.is_array()) throw std::runtime_error(what + ": value of \"" + key + "\" must be a list");
    uint64_t m = 0;
    for (const json& w : members) {
      if (!w.is_number_integer()) throw std::runtime_error(what + ": members must be integers");
      int x = w.get<int>();
      if (x < 0 || x >= n) throw std::runtime_error(what + ": member out of range in \"" + key + "\"");
      m |= uint64_t(1) << x;
    }
    int idx = LineMap::pair_rank(n, u, v);
    if (seen[idx]) throw std::runtime_error(what + ": duplicate pair key \"" + key + "\"");
    seen[idx] = true;
    f.sets[idx] = m;
  }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!seen[LineMap::pair_rank(n, u, v)])
        throw std::runtime_error(what + ": missing pair \"" + std::to_string(u) + "," +
                                 std::to_string(v) + "\"");
  return f;
}

json to_json(const EdgePartition& p) {
  json classes = json::array();
  for (const auto& cls : p.classes) {
    json c = json::array();
    for (auto [u, v] : cls) c.push_back(json::array({u, v}));
    classes.push_back(c);
  }
  return json{{"n", p.n}, {"classes", classes}};
}

EdgePartition partition_from_json(const json& j) {
  const std::string what = "partition";
  int n = int_field(j, "n", what);
  std::vector<std::vector<std::pair<int, int>>> classes;
  for (const json& c : array_field(j, "classes", what)) {
    if (!c.is_array()) throw std::runtime_error(what + ": each class must be a list of pairs");
    std::vector<std::pair<int, int>> cls;
    for (const json& e : c) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
        throw std::runtime_error(what + ": each pair must be two integers");
      cls.push_back({e[0].get<int>(), e[1].get<int>()});
    }
    classes.push_back(std::move(cls));
  }
  return EdgePartition::make(n, std::move(classes));
}

EdgePartition parse_partition(const std::string& content) {
  size_t i = content.find_first_not_of(" \t\r\n");
  if (i != std::string::npos && content[i] == '{')
    return partition_from_json(json::parse(content));
  return EdgePartition::parse_text(content);
}

std::vector<std::pair<Rat, Rat>> plane_points_from_json(const json& j) {
  const std::string what = "plane points";
  std::vector<std::pair<Rat, Rat>> pts;
  for (const json& p : array_field(j, "points", what)) {
    if (!p.is_array() || p.size() != 2)
      throw std::runtime_error(what + ": each point must be a coordinate pair");
    pts.push_back({rat_from_json(p[0], what), rat_from_json(p[1], what)});
  }
  return pts;
}

std::pair<int, std::vector<std::vector<int>>> unary_input_from_json(const json& j) {
  const std::string what = "unary input";
  int k = int_field(j, "k", what);
  std::vector<std::vector<int>> pts;
  for (const json& p : array_field(j, "points", what)) {
    if (!p.is_array()) throw std::runtime_error(what + ": each point must be a list of integers");
    std::vector<int> v;
    for (const json& x : p) {
      if (!x.is_number_integer()) throw std::runtime_error(what + ": entries must be integers");
      v.push_back(x.get<int>());
    }
    pts.push_back(std::move(v));
  }
  return {k, std::move(pts)};
}

std::pair<int, std::vector<uint64_t>> family_target_from_json(const json& j) {
  const std::string what = "line family target";
  int n = int_field(j, "n", what);
  if (n < 1 || n > kMaxVertices) throw std::runtime_error(what + ": n out of range");
  std::vector<uint64_t> masks;
  for (const json& line : array_field(j, "lines", what)) {
    if (!line.is_array()) throw std::runtime_error(what + ": each line must be a vertex list");
    uint64_t m = 0;
    for (const json& v : line) {
      if (!v.is_number_integer()) throw std::runtime_error(what + ": vertices must be integers");
      int x = v.get<int>();
      if (x < 0 || x >= n) throw std::runtime_error(what + ": vertex out of range");
      m |= uint64_t(1) << x;
    }
    masks.push_back(m);
  }
  return {n, std::move(masks)};
}

// --- reports -----------------------------------------------------------------------

json to_json(const LineFamily& f) {
  json lines = json::array();
  for (const Line& l : f.lines) {
    json gens = json::array();
    for (auto [u, v] : l.generators) gens.push_back(json::array({u, v}));
    lines.push_back(json{{"members", mask_to_list(l.members)}, {"generators", gens}});
  }
  return json{{"n", f.n},
              {"lambda", f.lambda()},
              {"mu", f.mu()},
              {"universal", f.universal_present()},
              {"lines", lines}};
}

json to_json(const LineStats& s) {
  return json{{"n", s.n},
              {"lambda", s.lambda},
              {"mu", s.mu},
              {"universal", s.universal},
              {"dbe", s.dbe()},
              {"mighty", s.mighty_sum()},
              {"mighty_adjusted", s.mighty_sum_adjusted()}};
}

std::string to_csv(const LineStats& s) {
  std::ostringstream out;
  out << "n,lambda,mu,universal,dbe,mighty\n";
  out << s.n << ',' << s.lambda << ',' << s.mu << ',' << (s.universal ? "true" : "false") << ','
      << (s.dbe() ? "true" : "false") << ',' << (s.mighty_sum() ? "true" : "false") << '\n';
  return out.str();
}

json to_json(const ClassReport& c) {
  json bridges = json::array();
  for (auto [u, v] : c.bridges) bridges.push_back(json::array({u, v}));
  json diameter;  // null when disconnected
  if (c.diameter) diameter = *c.diameter;
  return json{{"connected", c.connected}, {"bipartite", c.bipartite}, {"chordal", c.chordal},
              {"bisplit", c.bisplit},     {"hhd_free", c.hhd_free},   {"diameter", diameter},
              {"bridges", bridges}};
}

json to_json(const ScanReport& r) {
  json min_lambda;  // null when every graph had a universal line
  if (r.min_lambda_no_universal >= 0) min_lambda = r.min_lambda_no_universal;
  return json{{"n", r.n},
              {"instances_scanned", r.instances_scanned},
              {"dbe_violations", r.dbe_violations},
              {"mighty_violations", r.mighty_violations},
              {"mighty_adjusted_violations", r.mighty_adjusted_violations},
              {"min_lambda_no_universal", min_lambda},
              {"minimizers", r.minimizers},
              {"minimizer_count", r.minimizer_count},
              {"dominant_count", r.dominant_count},
              {"runtime_seconds", r.runtime_seconds}};
}

std::string to_csv(const ScanReport& r) {
  std::ostringstream out;
  out << "n,instances_scanned,dbe_violations,mighty_violations,mighty_adjusted_violations,"
         "min_lambda_no_universal,minimizer_count,dominant_count\n";
  out << r.n << ',' << r.instances_scanned << ',' << r.dbe_violations.size() << ','
      << r.mighty_violations.size() << ',' << r.mighty_adjusted_violations.size() << ',';
  if (r.min_lambda_no_universal >= 0) out << r.min_lambda_no_universal;
  out << ',' << r.minimizer_count << ',' << r.dominant_count << '\n';
  return out.str();
}

json to_json(const MinimaRow& row) {
  json min_lambda, f_value;
  if (row.min_lambda_no_universal >= 0) min_lambda = row.min_lambda_no_universal;
  if (row.f_value >= 0) f_value = row.f_value;
  return json{{"n", row.n},
              {"min_lambda_no_universal", min_lambda},
              {"minimizers", row.minimizers},
              {"minimizer_count", row.minimizer_count},
              {"f_value", f_value},
              {"all_minimizers_multipartite", row.all_minimizers_multipartite},
              {"exceptions", row.exceptions}};
}

json minima_table_to_json(const std::vector<MinimaRow>& rows) {
  json out = json::array();
  for (const MinimaRow& r : rows) out.push_back(to_json(r));
  return json{{"rows", out}};
}

std::string minima_table_to_csv(const std::vector<MinimaRow>& rows) {
  std::ostringstream out;
  out << "n,min_lambda_no_universal,f_value,minimizer_count,all_minimizers_multipartite,"
         "exception_count\n";
  for (const MinimaRow& r : rows) {
    out << r.n << ',';
    if (r.min_lambda_no_universal >= 0) out << r.min_lambda_no_universal;
    out << ',';
    if (r.f_value >= 0) out << r.f_value;
    out << ',' << r.minimizer_count << ',' << (r.all_minimizers_multipartite ? "true" : "false")
        << ',' << r.exceptions.size() << '\n';
  }
  return out.str();
}

json to_json(const MultipartiteF& f, int n) {
  json optima = json::array();
  for (const auto& parts : f.optima) optima.push_back(parts);
  return json{{"n", n}, {"value", f.value}, {"optima", optima}};
}

json to_json(const AxiomReport& a) {
  json out = json::object();
  json witnesses = json::object();
  for (int i = 0; i <= 6; ++i) {
    std::string name = "m" + std::to_string(i);
    out[name] = a.holds[i];
    if (!a.holds[i]) witnesses[name] = a.witness[i];
  }
  out["all"] = a.all();
  out["witnesses"] = witnesses;
  return out;
}

json equiv_to_json(const EquivResult& r, const EdgePartition& p, bool hypergraph_level) {
  (void)p;
  std::string verdict = r.verdict == EquivVerdict::accept   ? "accept"
                        : r.verdict == EquivVerdict::reject ? "reject"
                                                            : "dont_know";
  std::string message;
  switch (r.verdict) {
    case EquivVerdict::accept:
      message = "ACCEPT";
      break;
    case EquivVerdict::reject:
      message = hypergraph_level ? "REJECT: Does not arise from any hypergraph"
                                 : "REJECT: Does not arise from any graph";
      break;
    case EquivVerdict::dont_know:
      message = "DON'T KNOW";
      break;
  }
  json closure = json::array();
  for (uint64_t m : r.closure) closure.push_back(mask_to_list(m));
  json out{{"level", hypergraph_level ? "hypergraph" : "graph"},
           {"verdict", verdict},
           {"message", message},
           {"closure", closure}};
  if (hypergraph_level && r.verdict == EquivVerdict::accept) {
    json ts = json::array();
    for (const auto& t : r.h.triples) ts.push_back(json::array({t[0], t[1], t[2]}));
    out["triples"] = ts;
  }
  return out;
}

// --- schema validation ----------------------------------------------------------------

namespace {

bool type_matches(const std::string& t, const json& v) {
  if (t == "object") return v.is_object();
  if (t == "array") return v.is_array();
  if (t == "string") return v.is_string();
  if (t == "integer") return v.is_number_integer();
  if (t == "number") return v.is_number();
  if (t == "boolean") return v.is_boolean();
  if (t == "null") return v.is_null();
  return false;
}

std::optional<std::string> validate_at(const json& schema, const json& value,
                                       const std::string& path) {
  if (!schema.is_object()) return std::nullopt;  // empty schema accepts anything
  if (auto it = schema.find("type"); it != schema.end()) {
    bool ok = false;
    if (it->is_array()) {
      for (const json& t : *it) ok = ok || type_matches(t.get<std::string>(), value);
    } else {
      ok = type_matches(it->get<std::string>(), value);
    }
    if (!ok) return path + ": expected type " + it->dump() + ", got " + value.type_name();
  }
  if (auto it = schema.find("enum"); it != schema.end()) {
    bool ok = false;
    for (const json& e : *it) ok = ok || (e == value);
    if (!ok) return path + ": " + value.dump() + " not in enum " + it->dump();
  }
  if (auto it = schema.find("minimum"); it != schema.end()) {
    if (value.is_number() && value.get<double>() < it->get<double>())
      return path + ": " + value.dump() + " below minimum " + it->dump();
  }
  if (value.is_object()) {
    if (auto it = schema.find("required"); it != schema.end())
      for (const json& k : *it)
        if (!value.contains(k.get<std::string>()))
          return path + ": missing required key \"" + k.get<std::string>() + "\"";
    if (auto it = schema.find("properties"); it != schema.end())
      for (auto& [k, sub] : it->items())
        if (value.contains(k))
          if (auto err = validate_at(sub, value.at(k), path + "/" + k)) return err;
  }
  if (value.is_array()) {
    if (auto it = schema.find("items"); it != schema.end()) {
      size_t i = 0;
      for (const json& el : value) {
        if (auto err = validate_at(*it, el, path + "/" + std::to_string(i))) return err;
        ++i;
      }
    }
  }
  return std::nullopt;
}

// One schema per report kind; shipped under schemas/ in canonical form.
const std::map<std::string, const char*>& schema_sources() {
  static const std::map<std::string, const char*> sources = {
      {"lines", R"json({
  "$schema": "http://json-schema.org/draft-07/schema#",
  "title": "line family report",
  "type": "object",
  "required": ["n", "lambda", "mu", "universal", "lines"],
  "properties": {
    "n": {"type": "integer", "minimum": 1},
    "lambda": {"type": "integer", "minimum": 0},
    "mu": {"type": "integer", "minimum": 0},
    "universal": {"type": "boolean"},
    "lines": {
      "type": "array",
      "items": {
        "type": "object",
        "required": ["members", "generators"],
        "properties": {
          "members": {"type": "array", "items": {"type": "integer", "minimum": 0}},
          "generators": {
            "type": "array",
            "items": {"type": "array", "items": {"type": "integer", "minimum": 0}}
          }
        }
      }
    }
  }
})json"},
      {"check", R"json({
  "$schema": "http://json-schema.org/draft-07/schema#",
  "title": "conjecture check report",
  "type": "object",
  "required": ["n", "lambda", "mu", "universal", "dbe", "mighty", "mighty_adjusted", "check", "holds"],
  "properties": {
    "n": {"type": "integer", "minimum": 1},
    "lambda": {"type": "integer", "minimum": 0},
    "mu": {"type": "integer", "minimum": 0},
    "universal": {"type": "boolean"},
    "dbe": {"type": "boolean"},
    "mighty": {"type": "boolean"},
    "mighty_adjusted": {"type": "boolean"},
    "check": {"type": "string", "enum": ["dbe", "mighty"]},
    "holds": {"type": "boolean"}
  }
})json"},
      {"classify", R"json({
  "$schema": "http://json-schema.org/draft-07/schema#",
  "title": "graph class report",
  "type": "object",
  "required": ["connected", "bipartite", "chordal", "bisplit", "hhd_free", "diameter", "bridges"],
  "properties": {
    "connected": {"type": "boolean"},
    "bipartite": {"type": "boolean"},
    "chordal": {"type": "boolean"},
    "bisplit": {"type": "boolean"},
    "hhd_free": {"type": "boolean"},
    "diameter": {"type": ["integer", "null"]},
    "bridges": {
      "type": "array",
      "items": {"type": "array", "items": {"type": "integer", "minimum": 0}}
    }
  }
})json"},
      {"scan", R"json({
  "$schema": "http://json-schema.org/draft-07/schema#",
  "title": "scan report",
  "type": "object",
  "required": ["n", "instances_scanned", "dbe_violations", "mighty_violations", "mighty_adjusted_violations", "min_lambda_no_universal", "minimizers", "minimizer_count", "dominant_count", "runtime_seconds"],
  "properties": {
    "n": {"type": "integer", "minimum": 0},
    "instances_scanned": {"type": "integer", "minimum": 0},
    "dbe_violations": {"type": "array", "items": {"type": "string"}},
    "mighty_violations": {"type": "array", "items": {"type": "string"}},
    "mighty_adjusted_violations": {"type": "array", "items": {"type": "string"}},
    "min_lambda_no_universal": {"type": ["integer", "null"]},
    "minimizers": {"type": "array", "items": {"type": "string"}},
    "minimizer_count": {"type": "integer", "minimum": 0},
    "dominant_count": {"type": "integer", "minimum": 0},
    "runtime_seconds": {"type": "number", "minimum": 0}
  }
})json"},
      {"minima", R"json({
  "$schema": "http://json-schema.org/draft-07/schema#",
  "title": "per-size line minima table",
  "type": "object",
  "required": ["rows"],
  "properties": {
    "rows": {
      "type": "array",
      "items": {
        "type": "object",
        "required": ["n", "min_lambda_no_universal", "minimizers", "minimizer_count", "f_value", "all_minimizers_multipartite", "exceptions"],
        "properties": {
          "n": {"type": "integer", "minimum": 1},
          "min_lambda_no_universal": {"type": ["integer", "null"]},
          "minimizers": {"type": "array", "items": {"type": "string"}},
          "minimizer_count": {"type": "integer", "minimum": 0},
          "f_value": {"type": ["integer", "null"]},
          "all_minimizers_multipartite": {"type": "boolean"},
          "exceptions": {"type": "array", "items": {"type": "string"}}
        }
      }
    }
  }
})json"},
      {"f-multipartite", R"json({
  "$schema": "http://json-schema.org/draft-07/schema#",
  "title": "complete multipartite minimum",
  "type": "object",
  "required": ["n", "value", "optima"],
  "properties": {
    "n": {"type": "integer", "minimum": 3},
    "value": {"type": "integer", "minimum": 0},
    "optima": {
      "type": "array",
      "items": {"type": "array", "items": {"type": "integer", "minimum": 1}}
    }
  }
})json"},
      {"equiv", R"json({
  "$schema": "http://json-schema.org/draft-07/schema#",
  "title": "partition equivalence verdict",
  "type": "object",
  "required": ["level", "verdict", "message", "closure"],
  "properties": {
    "level": {"type": "string", "enum": ["graph", "hypergraph"]},
    "verdict": {"type": "string", "enum": ["accept", "reject", "dont_know"]},
    "message": {"type": "string"},
    "closure": {
      "type": "array",
      "items": {"type": "array", "items": {"type": "integer", "minimum": 0}}
    },
    "triples": {
      "type": "array",
      "items": {"type": "array", "items": {"type": "integer", "minimum": 0}}
    }
  }
})json"},
      {"recognize", R"json({
  "$schema": "http://json-schema.org/draft-07/schema#",
  "title": "recognition verdict",
  "type": "object",
  "required": ["kind", "status"],
  "properties": {
    "kind": {
      "type": "string",
      "enum": ["graph-metric", "graph-betweenness", "metric-betweenness", "graphic", "metric", "pseudometric", "line-map"]
    },
    "status": {"type": "string", "enum": ["accepted", "refused", "cap_exceeded"]},
    "reason": {"type": "string"},
    "witness": {"type": "array", "items": {"type": "integer", "minimum": 0}},
    "certificate": {}
  }
})json"},
      {"axioms", R"json({
  "$schema": "http://json-schema.org/draft-07/schema#",
  "title": "betweenness axiom report",
  "type": "object",
  "required": ["m0", "m1", "m2", "m3", "m4", "m5", "m6", "all", "witnesses"],
  "properties": {
    "m0": {"type": "boolean"},
    "m1": {"type": "boolean"},
    "m2": {"type": "boolean"},
    "m3": {"type": "boolean"},
    "m4": {"type": "boolean"},
    "m5": {"type": "boolean"},
    "m6": {"type": "boolean"},
    "all": {"type": "boolean"},
    "witnesses": {"type": "object"}
  }
})json"},
      {"embed", R"json({
  "$schema": "http://json-schema.org/draft-07/schema#",
  "title": "exact embedding report",
  "type": "object",
  "required": ["kind"],
  "properties": {
    "kind": {"type": "string", "enum": ["l1-plane", "linf", "unary", "rotate"]},
    "n": {"type": "integer", "minimum": 0},
    "nondegenerate": {"type": "boolean"},
    "metric": {"type": "object"},
    "dim": {"type": "integer", "minimum": 0},
    "k": {"type": "integer", "minimum": 0},
    "vectors": {"type": "array", "items": {"type": "array"}},
    "points": {"type": "array", "items": {"type": "array"}}
  }
})json"},
      {"search-line-family", R"json({
  "$schema": "http://json-schema.org/draft-07/schema#",
  "title": "line family realizability verdict",
  "type": "object",
  "required": ["level", "status"],
  "properties": {
    "level": {"type": "string", "enum": ["graph", "metric", "betweenness", "hypergraph"]},
    "status": {"type": "string", "enum": ["accepted", "refused", "cap_exceeded"]},
    "reason": {"type": "string"},
    "certificate": {}
  }
})json"},
      {"generate", R"json({
  "$schema": "http://json-schema.org/draft-07/schema#",
  "title": "generated graph list",
  "type": "object",
  "required": ["n", "count", "graph6"],
  "properties": {
    "n": {"type": "integer", "minimum": 1},
    "count": {"type": "integer", "minimum": 0},
    "graph6": {"type": "array", "items": {"type": "string"}}
  }
})json"},
  };
  return sources;
}

}  // namespace

std::optional<std::string> validate_json(const json& schema, const json& value) {
  return validate_at(schema, value, "#");
}

const json& schema_for(const std::string& name) {
  static std::map<std::string, json> parsed;
  auto it = parsed.find(name);
  if (it != parsed.end()) return it->second;
  const auto& sources = schema_sources();
  auto src = sources.find(name);
  if (src == sources.end()) throw std::invalid_argument("no schema named " + name);
  return parsed.emplace(name, json::parse(src->second)).first->second;
}

std::vector<std::string> schema_names() {
  std::vector<std::string> names;
  for (const auto& [name, text] : schema_sources()) names.push_back(name);
  return names;
}

std::string schema_text(const std::string& name) { return schema_for(name).dump(2) + "\n"; }

}  // namespace linelab
