#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "linelab/equiv.hpp"
#include "linelab/hypergraph.hpp"
#include "linelab/lines.hpp"
#include "linelab/metric_space.hpp"
#include "linelab/scan.hpp"

namespace linelab {

using json = nlohmann::json;

// --- file helpers ---------------------------------------------------------------

// Whole file as a string; throws std::runtime_error naming the path.
std::string read_file(const std::string& path);
// Parse a file as JSON; parse errors name the path.
json load_json(const std::string& path);

// --- instance (de)serialization ---------------------------------------------------
// Distances serialize as strings "p" or "p/q"; plain JSON integers are accepted
// on input.  All vertex/point indices are 0-based in JSON files.

json to_json(const MetricSpace& m);          // {"n", "d": ["p/q", ...]} row-major
MetricSpace metric_space_from_json(const json& j);

json to_json(const TernaryRelation& r);      // {"n", "triples": [[u,v,w], ...]}
TernaryRelation ternary_relation_from_json(const json& j);

json to_json(const Hypergraph3& h);          // {"n", "triples": [[a,b,c], ...]}
Hypergraph3 hypergraph_from_json(const json& j);

json to_json(const LineMap& f);              // {"n", "map": {"u,v": [w, ...]}}
LineMap line_map_from_json(const json& j);

json to_json(const EdgePartition& p);        // {"n", "classes": [[[u,v], ...], ...]}
EdgePartition partition_from_json(const json& j);
// Sniffs JSON ('{' first) vs the text form "i: u-v u-v ...".
EdgePartition parse_partition(const std::string& content);

// l1-plane / rotation points: {"points": [["x","y"], ...]}
std::vector<std::pair<Rat, Rat>> plane_points_from_json(const json& j);
// unary input: {"k", "points": [[int, ...], ...]}
std::pair<int, std::vector<std::vector<int>>> unary_input_from_json(const json& j);

// line-family search target: {"n", "lines": [[v, ...], ...]}
std::pair<int, std::vector<uint64_t>> family_target_from_json(const json& j);

// --- report serialization ----------------------------------------------------------

json to_json(const LineFamily& f);  // adds lambda/mu/universal; members as sorted lists
json to_json(const LineStats& s);   // n, lambda, mu, universal, dbe, mighty, mighty_adjusted
std::string to_csv(const LineStats& s);  // header + one row: n,lambda,mu,universal,dbe,mighty

json to_json(const ClassReport& c);

json to_json(const ScanReport& r);
std::string to_csv(const ScanReport& r);

json to_json(const MinimaRow& row);
json minima_table_to_json(const std::vector<MinimaRow>& rows);
std::string minima_table_to_csv(const std::vector<MinimaRow>& rows);

json to_json(const MultipartiteF& f, int n);

json to_json(const AxiomReport& a);

json equiv_to_json(const EquivResult& r, const EdgePartition& p, bool hypergraph_level);

// --- schema validation ---------------------------------------------------------------
// Subset of JSON Schema: type (name or list), required, properties, items,
// enum, minimum.  Returns an error message with a JSON-pointer-style path, or
// nullopt when the value conforms.

std::optional<std::string> validate_json(const json& schema, const json& value);

// Embedded output schemas, keyed by report kind: lines, check, classify, scan,
// minima, f-multipartite, equiv, recognize, axioms, embed, search-line-family,
// generate.  Throws on an unknown name.
const json& schema_for(const std::string& name);
std::vector<std::string> schema_names();
// The schema's canonical serialization, as shipped under schemas/.
std::string schema_text(const std::string& name);

}  // namespace linelab
