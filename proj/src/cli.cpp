#include "linelab/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "linelab/enumerate.hpp"
#include "linelab/graph6.hpp"
#include "linelab/io.hpp"
#include "linelab/kernel.hpp"
#include "linelab/lines.hpp"
#include "linelab/scan.hpp"

namespace linelab {

namespace {

// --- input loading ------------------------------------------------------------------

struct Instance {
  enum class Kind { graph, metric, relation } kind = Kind::graph;
  Graph g;
  MetricSpace m;
  TernaryRelation r;
};

Instance load_instance(const std::string& graph6, const std::string& file) {
  Instance inst;
  if (!graph6.empty()) {
    inst.kind = Instance::Kind::graph;
    inst.g = graph6_parse(graph6);
    return inst;
  }
  if (file.empty()) throw std::runtime_error("need --graph6 or --file");
  std::string content = read_file(file);
  size_t i = content.find_first_not_of(" \t\r\n");
  if (i != std::string::npos && content[i] == '{') {
    json j = json::parse(content);
    if (j.contains("d")) {
      inst.kind = Instance::Kind::metric;
      inst.m = metric_space_from_json(j);
      if (auto bad = metric_check(inst.m))
        throw std::runtime_error(file + ": not a metric space (" + bad->axiom + " fails)");
    } else if (j.contains("triples")) {
      inst.kind = Instance::Kind::relation;
      inst.r = ternary_relation_from_json(j);
    } else {
      throw std::runtime_error(file + ": JSON instance needs a \"d\" or \"triples\" field");
    }
    return inst;
  }
  std::istringstream ss(content);
  std::string line;
  while (std::getline(ss, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    inst.kind = Instance::Kind::graph;
    inst.g = graph6_parse(line);
    return inst;
  }
  throw std::runtime_error(file + ": empty input");
}

// Metric view of an instance (graphs via shortest paths; relations have none).
MetricSpace instance_metric(const Instance& inst) {
  switch (inst.kind) {
    case Instance::Kind::graph:
      return metric_from_graph(inst.g);
    case Instance::Kind::metric:
      return inst.m;
    default:
      throw std::runtime_error("this command needs distances, not a bare relation");
  }
}

// --- output plumbing ----------------------------------------------------------------

struct Sink {
  std::ostream* os;
  std::ofstream file;

  explicit Sink(std::ostream& fallback, const std::string& path) : os(&fallback) {
    if (!path.empty()) {
      file.open(path, std::ios::trunc);
      if (!file) throw std::runtime_error("cannot write " + path);
      os = &file;
    }
  }
  std::ostream& stream() { return *os; }
};

void emit_json(std::ostream& os, const std::string& schema_name, const json& j) {
  if (auto err = validate_json(schema_for(schema_name), j))
    throw std::logic_error("internal error: report fails its own schema: " + *err);
  os << j.dump(2) << "\n";
}

std::string bool_word(bool b) { return b ? "true" : "false"; }

// --- per-subcommand option bundles ----------------------------------------------------

struct CommonIn {
  std::string graph6;
  std::string file;
  std::string format = "json";
  std::string out;
};

void add_common(CLI::App* cmd, CommonIn& o, bool with_graph6 = true) {
  if (with_graph6) cmd->add_option("--graph6", o.graph6, "inline graph6 record");
  cmd->add_option("--file", o.file, "input file");
  cmd->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  cmd->add_option("--out", o.out, "write the report here instead of stdout");
}

// --- handlers ------------------------------------------------------------------------

int do_lines(const CommonIn& in, bool closure, std::ostream& out) {
  Instance inst = load_instance(in.graph6, in.file);
  LineFamily fam;
  if (inst.kind == Instance::Kind::relation) {
    if (closure) throw std::runtime_error("closure lines need distances, not a bare relation");
    fam = line_family(inst.r);
  } else {
    fam = line_family(instance_metric(inst),
                      closure ? FamilyMode::closure_lines : FamilyMode::lines);
  }
  Sink sink(out, in.out);
  if (in.format == "json") {
    emit_json(sink.stream(), "lines", to_json(fam));
  } else if (in.format == "csv") {
    sink.stream() << to_csv(line_stats(fam));
  } else {
    LineStats st = line_stats(fam);
    sink.stream() << "n=" << st.n << " lambda=" << st.lambda << " mu=" << st.mu
                  << " universal=" << bool_word(st.universal) << "\n";
    for (const Line& l : fam.lines) {
      sink.stream() << "{";
      bool first = true;
      for (int v = 0; v < fam.n; ++v)
        if ((l.members >> v) & 1) {
          sink.stream() << (first ? "" : ",") << v;
          first = false;
        }
      sink.stream() << "} from";
      for (auto [u, v] : l.generators) sink.stream() << " " << u << "-" << v;
      sink.stream() << "\n";
    }
  }
  return 0;
}

int do_check(const CommonIn& in, const std::string& which, std::ostream& out) {
  Instance inst = load_instance(in.graph6, in.file);
  LineFamily fam;
  int diameter = -1;
  if (inst.kind == Instance::Kind::relation) {
    fam = line_family(inst.r);
  } else {
    MetricSpace m = instance_metric(inst);
    fam = line_family(m);
    Rat dmax(0);
    for (const Rat& q : m.d) dmax = std::max(dmax, q);
    diameter = dmax <= Rat(2) ? 2 : 3;  // only the <=2 threshold matters here
  }
  LineStats st = line_stats(fam);
  bool holds;
  if (which == "dbe") {
    holds = st.dbe();
  } else {
    holds = st.mighty_sum();
    if (diameter >= 0 && diameter <= 2 && st.n >= 3) holds = holds && st.mighty_sum_adjusted();
  }
  json j = to_json(st);
  j["check"] = which;
  j["holds"] = holds;
  Sink sink(out, in.out);
  if (in.format == "json") {
    emit_json(sink.stream(), "check", j);
  } else if (in.format == "csv") {
    sink.stream() << to_csv(st);
  } else {
    sink.stream() << which << (holds ? " holds" : " FAILS") << " (n=" << st.n
                  << ", lambda=" << st.lambda << ", mu=" << st.mu
                  << ", universal=" << bool_word(st.universal) << ")\n";
  }
  return holds ? 0 : 2;
}

int do_classify(const CommonIn& in, std::ostream& out) {
  Instance inst = load_instance(in.graph6, in.file);
  if (inst.kind != Instance::Kind::graph) throw std::runtime_error("classify expects a graph");
  ClassReport rep = classify(inst.g);
  Sink sink(out, in.out);
  if (in.format == "json") {
    emit_json(sink.stream(), "classify", to_json(rep));
  } else {
    sink.stream() << "connected=" << bool_word(rep.connected)
                  << " bipartite=" << bool_word(rep.bipartite)
                  << " chordal=" << bool_word(rep.chordal)
                  << " bisplit=" << bool_word(rep.bisplit)
                  << " hhd_free=" << bool_word(rep.hhd_free);
    if (rep.diameter) sink.stream() << " diameter=" << *rep.diameter;
    sink.stream() << "\n";
    if (!rep.bridges.empty()) {
      sink.stream() << "bridges:";
      for (auto [u, v] : rep.bridges) sink.stream() << " " << u << "-" << v;
      sink.stream() << "\n";
    }
  }
  return 0;
}

ScanChecks parse_checks(const std::string& csv) {
  ScanChecks c{false, false, false, false};
  std::istringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok == "dbe")
      c.dbe = true;
    else if (tok == "mighty")
      c.mighty = true;
    else if (tok == "min-lines")
      c.min_lines = true;
    else if (tok == "dominant")
      c.dominant = true;
    else
      throw CLI::ValidationError("--checks", "unknown check \"" + tok + "\"");
  }
  if (!c.dbe && !c.mighty && !c.min_lines && !c.dominant)
    throw CLI::ValidationError("--checks", "no checks selected");
  return c;
}

int do_scan(const CommonIn& in, int n, const std::string& checks_csv, int jobs, int cap,
            const std::string& checkpoint, bool reference, std::ostream& out,
            std::ostream& err) {
  ScanChecks checks = parse_checks(checks_csv);
  ScanReport rep;
  if (!in.file.empty()) {
    std::ifstream stream(in.file);
    if (!stream) throw std::runtime_error("cannot open " + in.file);
    rep = scan_stream(stream, checks, jobs);
  } else if (n > 0) {
    rep = reference ? scan_reference(n, checks, cap) : scan_internal(n, checks, jobs, checkpoint, cap);
  } else {
    throw std::runtime_error("scan needs --n (internal enumeration) or --file (graph6 stream)");
  }
  Sink sink(out, in.out);
  if (in.format == "csv")
    sink.stream() << to_csv(rep);
  else if (in.format == "text")
    sink.stream() << "n=" << rep.n << " scanned=" << rep.instances_scanned
                  << " dbe_violations=" << rep.dbe_violations.size()
                  << " mighty_violations=" << rep.mighty_violations.size()
                  << " adjusted_violations=" << rep.mighty_adjusted_violations.size()
                  << " min_lambda_no_universal=" << rep.min_lambda_no_universal
                  << " minimizers=" << rep.minimizer_count << "\n";
  else
    emit_json(sink.stream(), "scan", to_json(rep));
  if (scan_found_violations(rep)) {
    err << "conjecture violations found\n";
    return 2;
  }
  return 0;
}

int do_minima(const CommonIn& in, int max_n, const std::string& source, int jobs, int cap,
              std::ostream& out) {
  std::vector<MinimaRow> rows;
  ScanChecks checks{false, false, true, false};
  if (!in.file.empty()) {
    std::ifstream stream(in.file);
    if (!stream) throw std::runtime_error("cannot open " + in.file);
    rows.push_back(minima_row(scan_stream(stream, checks, jobs)));
  } else if (source == "internal") {
    if (max_n < 3) throw std::runtime_error("minima needs --max-n >= 3");
    for (int n = 3; n <= max_n; ++n) rows.push_back(minima_row(scan_internal(n, checks, jobs, "", cap)));
  } else {
    throw std::runtime_error("minima needs --file or --source internal");
  }
  Sink sink(out, in.out);
  if (in.format == "csv")
    sink.stream() << minima_table_to_csv(rows);
  else if (in.format == "text")
    for (const MinimaRow& r : rows) {
      sink.stream() << "n=" << r.n << " min_lambda=" << r.min_lambda_no_universal
                    << " f=" << r.f_value << " minimizers=" << r.minimizer_count
                    << " all_multipartite=" << bool_word(r.all_minimizers_multipartite);
      if (!r.exceptions.empty()) {
        sink.stream() << " exceptions:";
        for (const auto& e : r.exceptions) sink.stream() << " " << e;
      }
      sink.stream() << "\n";
    }
  else
    emit_json(sink.stream(), "minima", minima_table_to_json(rows));
  return 0;
}

int do_f_multipartite(const CommonIn& in, int n, std::ostream& out) {
  MultipartiteF f = multipartite_f(n);
  Sink sink(out, in.out);
  if (in.format == "text") {
    sink.stream() << "f(" << n << ") = " << f.value << "; optima:";
    for (const auto& parts : f.optima) {
      sink.stream() << " ";
      for (size_t i = 0; i < parts.size(); ++i)
        sink.stream() << (i ? "+" : "") << parts[i];
    }
    sink.stream() << "\n";
  } else {
    emit_json(sink.stream(), "f-multipartite", to_json(f, n));
  }
  return 0;
}

int do_equiv(const CommonIn& in, const std::string& level, std::ostream& out) {
  if (in.file.empty()) throw std::runtime_error("equiv needs --file with a pair partition");
  EdgePartition p = parse_partition(read_file(in.file));
  bool hyper = level == "hypergraph";
  EquivResult r = hyper ? equiv_hypergraph(p) : equiv_graph(p);
  Sink sink(out, in.out);
  if (in.format == "json")
    emit_json(sink.stream(), "equiv", equiv_to_json(r, p, hyper));
  else
    sink.stream() << render_equiv(r, p, hyper);
  return 0;
}

const char* status_word(RecStatus s) {
  switch (s) {
    case RecStatus::accepted:
      return "accepted";
    case RecStatus::refused:
      return "refused";
    default:
      return "cap_exceeded";
  }
}

int do_recognize(const CommonIn& in, const std::string& kind, int cap, std::ostream& out,
                 std::ostream& err) {
  if (in.file.empty()) throw std::runtime_error("recognize needs --file");
  json input = load_json(in.file);
  json rep{{"kind", kind}};
  RecStatus status = RecStatus::refused;

  if (kind == "graph-metric") {
    auto res = recognize_graph_metric(metric_space_from_json(input));
    status = res.ok ? RecStatus::accepted : RecStatus::refused;
    if (res.ok)
      rep["certificate"] = json{{"graph6", graph6_write(res.g)}};
    else
      rep["reason"] = res.reason;
    if (!res.witness.empty()) rep["witness"] = res.witness;
  } else if (kind == "graph-betweenness") {
    auto res = recognize_graph_betweenness(ternary_relation_from_json(input));
    status = res.ok ? RecStatus::accepted : RecStatus::refused;
    if (res.ok)
      rep["certificate"] = json{{"graph6", graph6_write(res.g)}};
    else
      rep["reason"] = res.reason;
    if (!res.witness.empty()) rep["witness"] = res.witness;
  } else if (kind == "metric-betweenness") {
    auto res = recognize_metric_betweenness(ternary_relation_from_json(input),
                                            cap > 0 ? cap : 12);
    status = res.status == MetricBetweennessResult::Status::accepted   ? RecStatus::accepted
             : res.status == MetricBetweennessResult::Status::refused ? RecStatus::refused
                                                                      : RecStatus::cap_exceeded;
    if (status == RecStatus::accepted)
      rep["certificate"] = to_json(res.certificate);
    else
      rep["reason"] = res.reason;
    if (!res.witness.empty()) rep["witness"] = res.witness;
  } else if (kind == "graphic") {
    auto res = is_graphic(hypergraph_from_json(input), cap > 0 ? cap : 8);
    status = res.status;
    if (res.ok())
      rep["certificate"] = json{{"graph6", graph6_write(res.g)}};
    else
      rep["reason"] = res.reason;
  } else if (kind == "metric") {
    auto res = is_metric(hypergraph_from_json(input), cap > 0 ? cap : 8);
    status = res.status;
    if (res.ok())
      rep["certificate"] = to_json(res.certificate);
    else
      rep["reason"] = res.reason;
  } else if (kind == "pseudometric") {
    auto res = is_pseudometric(hypergraph_from_json(input), cap > 0 ? cap : 20);
    status = res.status;
    if (res.ok())
      rep["certificate"] = to_json(res.certificate);
    else
      rep["reason"] = res.reason;
  } else {  // line-map
    auto res = recognize_line_map(line_map_from_json(input));
    status = res.ok ? RecStatus::accepted : RecStatus::refused;
    if (res.ok)
      rep["certificate"] = to_json(res.h);
    else
      rep["reason"] = res.reason;
    if (res.witness[0] >= 0)
      rep["witness"] = std::vector<int>(res.witness.begin(), res.witness.end());
  }

  rep["status"] = status_word(status);
  Sink sink(out, in.out);
  if (in.format == "text") {
    sink.stream() << status_word(status);
    if (rep.contains("reason")) sink.stream() << ": " << rep["reason"].get<std::string>();
    sink.stream() << "\n";
    if (rep.contains("certificate")) sink.stream() << rep["certificate"].dump(2) << "\n";
  } else {
    emit_json(sink.stream(), "recognize", rep);
  }
  if (status == RecStatus::cap_exceeded) {
    err << "recognition cap exceeded\n";
    return 1;
  }
  return 0;
}

int do_axioms(const CommonIn& in, std::ostream& out) {
  if (in.file.empty()) throw std::runtime_error("axioms needs --file with a ternary relation");
  AxiomReport rep = check_axioms(ternary_relation_from_json(load_json(in.file)));
  Sink sink(out, in.out);
  if (in.format == "text") {
    for (int i = 0; i <= 6; ++i) {
      sink.stream() << "m" << i << (rep.holds[i] ? " holds" : " FAILS");
      if (!rep.holds[i]) {
        sink.stream() << " at (";
        for (size_t k = 0; k < rep.witness[i].size(); ++k)
          sink.stream() << (k ? "," : "") << rep.witness[i][k];
        sink.stream() << ")";
      }
      sink.stream() << "\n";
    }
  } else {
    emit_json(sink.stream(), "axioms", to_json(rep));
  }
  return 0;
}

int do_embed(const CommonIn& in, const std::string& mode, std::ostream& out) {
  if (in.file.empty()) throw std::runtime_error("embed needs --file");
  json input = load_json(in.file);
  json rep{{"kind", mode}};
  if (mode == "l1-plane") {
    auto pts = plane_points_from_json(input);
    MetricSpace m = l1_plane_metric(pts);
    rep["n"] = m.n;
    rep["nondegenerate"] = l1_plane_nondegenerate(pts);
    rep["metric"] = to_json(m);
  } else if (mode == "linf") {
    MetricSpace m = metric_space_from_json(input);
    if (auto bad = metric_check(m))
      throw std::runtime_error("input is not a metric space (" + bad->axiom + " fails)");
    auto rows = linf_embedding(m);
    rep["n"] = m.n;
    rep["dim"] = m.n;
    json vectors = json::array();
    for (const auto& row : rows) {
      json v = json::array();
      for (const Rat& q : row) v.push_back(rat_str(q));
      vectors.push_back(v);
    }
    rep["vectors"] = vectors;
  } else if (mode == "unary") {
    auto [k, pts] = unary_input_from_json(input);
    auto vecs = unary_embedding(pts, k);
    rep["k"] = k;
    rep["n"] = static_cast<int>(pts.size());
    rep["vectors"] = vecs;
  } else {  // rotate
    auto pts = plane_points_from_json(input);
    json points = json::array();
    for (const auto& p : pts) {
      auto q = rotate_l1_to_linf(p);
      points.push_back(json::array({rat_str(q.first), rat_str(q.second)}));
    }
    rep["n"] = static_cast<int>(pts.size());
    rep["points"] = points;
  }
  Sink sink(out, in.out);
  if (in.format == "text")
    sink.stream() << rep.dump(2) << "\n";
  else
    emit_json(sink.stream(), "embed", rep);
  return 0;
}

int do_search_family(const CommonIn& in, const std::string& level_name, std::ostream& out,
                     std::ostream& err) {
  if (in.file.empty()) throw std::runtime_error("search-line-family needs --file");
  auto [n, target] = family_target_from_json(load_json(in.file));
  SearchLevel level = level_name == "graph"        ? SearchLevel::graph
                      : level_name == "metric"     ? SearchLevel::metric
                      : level_name == "betweenness" ? SearchLevel::betweenness
                                                    : SearchLevel::hypergraph;
  FamilySearchResult res = line_family_search(n, target, level);
  json rep{{"level", level_name}, {"status", status_word(res.status)}};
  if (!res.reason.empty()) rep["reason"] = res.reason;
  if (res.status == RecStatus::accepted) {
    if (level == SearchLevel::graph)
      rep["certificate"] = json{{"graph6", graph6_write(res.g)}};
    else if (level == SearchLevel::hypergraph)
      rep["certificate"] = to_json(res.h);
    else if (level == SearchLevel::metric)
      rep["certificate"] = json{{"hypergraph", to_json(res.h)}, {"metric", to_json(res.ms)}};
    else
      rep["certificate"] = json{{"hypergraph", to_json(res.h)}, {"relation", to_json(res.r)}};
  }
  Sink sink(out, in.out);
  if (in.format == "text") {
    sink.stream() << status_word(res.status);
    if (!res.reason.empty()) sink.stream() << ": " << res.reason;
    sink.stream() << "\n";
    if (rep.contains("certificate")) sink.stream() << rep["certificate"].dump(2) << "\n";
  } else {
    emit_json(sink.stream(), "search-line-family", rep);
  }
  if (res.status == RecStatus::cap_exceeded) {
    err << "search cap exceeded\n";
    return 1;
  }
  return 0;
}

int do_generate(const CommonIn& in, int n, int cap, std::ostream& out) {
  std::vector<std::string> records;
  enumerate_connected(n, [&](const Graph& g) { records.push_back(graph6_write(g)); }, cap);
  Sink sink(out, in.out);
  if (in.format == "json") {
    json rep{{"n", n}, {"count", static_cast<long long>(records.size())}, {"graph6", records}};
    emit_json(sink.stream(), "generate", rep);
  } else {
    for (const auto& rec : records) sink.stream() << rec << "\n";
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact toolkit for lines, betweenness, and line counts in finite metric spaces"};
  app.require_subcommand(1);

  CommonIn lines_in, closure_in, check_in, classify_in, scan_in, minima_in, fmp_in, equiv_in,
      rec_in, axioms_in, embed_in, search_in, gen_in;

  auto* lines_cmd = app.add_subcommand("lines", "line family of a graph, metric space, or relation");
  add_common(lines_cmd, lines_in);

  auto* closure_cmd = app.add_subcommand("closure-lines", "closure line family of a graph or metric space");
  add_common(closure_cmd, closure_in);

  std::string check_which = "dbe";
  auto* check_cmd = app.add_subcommand("check", "verify a line-count inequality on one instance");
  check_cmd->add_option("kind", check_which, "dbe: >= n lines or a universal line; mighty: lambda + mu >= n")
      ->required()
      ->check(CLI::IsMember({"dbe", "mighty"}));
  add_common(check_cmd, check_in);

  auto* classify_cmd = app.add_subcommand("classify", "structural graph classes and bridges");
  add_common(classify_cmd, classify_in);

  int scan_n = 0, scan_jobs = 0, scan_cap = 8;
  std::string scan_checks = "dbe,mighty,min-lines", scan_checkpoint;
  bool scan_reference_flag = false;
  auto* scan_cmd = app.add_subcommand("scan", "scan all connected graphs of one size");
  scan_cmd->add_option("--n", scan_n, "internal enumeration size");
  scan_cmd->add_option("--checks", scan_checks, "comma list: dbe,mighty,min-lines,dominant");
  scan_cmd->add_option("--jobs", scan_jobs, "worker threads (0 = all)");
  scan_cmd->add_option("--cap", scan_cap, "internal enumeration size cap");
  scan_cmd->add_option("--checkpoint", scan_checkpoint, "resumable progress file");
  scan_cmd->add_flag("--reference", scan_reference_flag, "serial exact-arithmetic path");
  add_common(scan_cmd, scan_in, false);

  int minima_max_n = 0, minima_jobs = 0, minima_cap = 8;
  std::string minima_source = "internal";
  auto* minima_cmd = app.add_subcommand("minima", "fewest lines among graphs with no universal line, by size");
  minima_cmd->add_option("--max-n", minima_max_n, "table rows for 3..max-n (internal source)");
  minima_cmd->add_option("--source", minima_source, "internal")->check(CLI::IsMember({"internal"}));
  minima_cmd->add_option("--jobs", minima_jobs, "worker threads (0 = all)");
  minima_cmd->add_option("--cap", minima_cap, "internal enumeration size cap");
  add_common(minima_cmd, minima_in, false);

  int fmp_n = 0;
  auto* fmp_cmd = app.add_subcommand("f-multipartite", "minimum line count over complete multipartite graphs");
  fmp_cmd->add_option("--n", fmp_n, "vertex count")->required();
  add_common(fmp_cmd, fmp_in, false);

  std::string equiv_level;
  auto* equiv_cmd = app.add_subcommand("equiv", "can a pair partition be a line equivalence?");
  equiv_cmd->add_option("level", equiv_level, "graph (alias g) or hypergraph (alias h)")
      ->required()
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, std::string>{{"g", "graph"}, {"h", "hypergraph"},
                                             {"graph", "graph"}, {"hypergraph", "hypergraph"}}));
  add_common(equiv_cmd, equiv_in, false);
  equiv_in.format = "text";

  std::string rec_kind;
  int rec_cap = 0;
  auto* rec_cmd = app.add_subcommand("recognize", "does the instance arise from a richer structure?");
  rec_cmd->add_option("kind", rec_kind, "what to recognize")
      ->required()
      ->check(CLI::IsMember({"graph-metric", "graph-betweenness", "metric-betweenness", "graphic",
                             "metric", "pseudometric", "line-map"}));
  rec_cmd->add_option("--cap", rec_cap, "search size cap (kind-specific default)");
  add_common(rec_cmd, rec_in, false);

  auto* axioms_cmd = app.add_subcommand("axioms", "betweenness axioms of a ternary relation");
  add_common(axioms_cmd, axioms_in, false);

  std::string embed_mode;
  auto* embed_cmd = app.add_subcommand("embed", "exact embeddings and isometries");
  embed_cmd->add_option("mode", embed_mode, "l1-plane | linf | unary | rotate")
      ->required()
      ->check(CLI::IsMember({"l1-plane", "linf", "unary", "rotate"}));
  add_common(embed_cmd, embed_in, false);

  std::string search_level = "graph";
  auto* search_cmd = app.add_subcommand("search-line-family", "find an instance with a given line set");
  search_cmd->add_option("--level", search_level, "instance space to search")
      ->check(CLI::IsMember({"graph", "metric", "betweenness", "hypergraph"}));
  add_common(search_cmd, search_in, false);

  int gen_n = 0, gen_cap = 11;
  auto* gen_cmd = app.add_subcommand("generate", "emit all connected graphs of one size as graph6");
  gen_cmd->add_option("--n", gen_n, "vertex count")->required();
  gen_cmd->add_option("--cap", gen_cap, "size cap");
  add_common(gen_cmd, gen_in, false);
  gen_in.format = "text";

  std::vector<const char*> argv;
  argv.push_back("linelab");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream help_out, help_err;
    int code = app.exit(e, help_out, help_err);
    out << help_out.str();
    err << help_err.str();
    return code == 0 ? 0 : 1;
  }

  try {
    if (*lines_cmd) return do_lines(lines_in, false, out);
    if (*closure_cmd) return do_lines(closure_in, true, out);
    if (*check_cmd) return do_check(check_in, check_which, out);
    if (*classify_cmd) return do_classify(classify_in, out);
    if (*scan_cmd)
      return do_scan(scan_in, scan_n, scan_checks, scan_jobs, scan_cap, scan_checkpoint,
                     scan_reference_flag, out, err);
    if (*minima_cmd)
      return do_minima(minima_in, minima_max_n, minima_source, minima_jobs, minima_cap, out);
    if (*fmp_cmd) return do_f_multipartite(fmp_in, fmp_n, out);
    if (*equiv_cmd) return do_equiv(equiv_in, equiv_level, out);
    if (*rec_cmd) return do_recognize(rec_in, rec_kind, rec_cap, out, err);
    if (*axioms_cmd) return do_axioms(axioms_in, out);
    if (*embed_cmd) return do_embed(embed_in, embed_mode, out);
    if (*search_cmd) return do_search_family(search_in, search_level, out, err);
    if (*gen_cmd) return do_generate(gen_in, gen_n, gen_cap, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "error: no subcommand\n";
  return 1;
}

int run_cli(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.push_back(argv[i]);
  return run_cli(args, std::cout, std::cerr);
}

}  // namespace linelab
