#include "cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "endgraph/counterexample_checks.hpp"
#include "endgraph/degree.hpp"
#include "endgraph/error.hpp"
#include "endgraph/exhausting.hpp"
#include "endgraph/families.hpp"
#include "endgraph/flow.hpp"
#include "endgraph/io.hpp"
#include "endgraph/presentation.hpp"

namespace endgraph::cli {
namespace {

using json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

long parse_long(std::string_view s, const std::string& what) {
  long v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) throw UsageError("bad " + what + " '" + std::string(s) + "'");
  return v;
}

// "a..b", "a.." (open end) or a single level
std::pair<long, std::optional<long>> parse_range(std::string_view s, const std::string& what) {
  const auto dots = s.find("..");
  if (dots == std::string_view::npos) {
    const long v = parse_long(s, what);
    return {v, v};
  }
  const long lo = parse_long(s.substr(0, dots), what);
  const auto rest = s.substr(dots + 2);
  if (rest.empty()) return {lo, std::nullopt};
  return {lo, parse_long(rest, what)};
}

std::vector<Level> depth_list(const RunConfig& cfg) {
  if (cfg.depths.empty()) return {static_cast<Level>(cfg.depth)};
  auto [lo, hi] = parse_range(cfg.depths, "depth range");
  if (!hi || lo < 0 || *hi < lo) throw UsageError("depth range must be a..b with 0 <= a <= b");
  std::vector<Level> ds;
  for (long d = lo; d <= *hi; ++d) ds.push_back(static_cast<Level>(d));
  return ds;
}

bool glob(std::string_view p, std::string_view s) {
  if (p.empty()) return s.empty();
  if (p[0] == '*') return glob(p.substr(1), s) || (!s.empty() && glob(p, s.substr(1)));
  return !s.empty() && (p[0] == '?' || p[0] == s[0]) && glob(p.substr(1), s.substr(1));
}

// comma separated items, each "pattern[@lo..hi]"; pattern is a tag glob
// with * and ?, empty meaning every vertex
VertexSet select(const LevelledDigraph& g, const std::string& text, const std::string& what) {
  if (text.empty()) throw UsageError("--" + what + " is required");
  std::vector<Vertex> picked;
  std::istringstream items(text);
  std::string item;
  while (std::getline(items, item, ',')) {
    if (item.empty()) continue;
    std::string pattern = item;
    long lo = 0;
    std::optional<long> hi;
    if (auto at = item.find('@'); at != std::string::npos) {
      pattern = item.substr(0, at);
      std::tie(lo, hi) = parse_range(std::string_view(item).substr(at + 1), "level range");
    }
    if (pattern.empty()) pattern = "*";
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      const auto l = static_cast<long>(g.level(v));
      if (l < lo || (hi && l > *hi)) continue;
      if (glob(pattern, g.tag(v))) picked.push_back(v);
    }
  }
  if (picked.empty()) throw UsageError("--" + what + " '" + text + "' selects no vertex");
  return make_set(std::move(picked));
}

json tags(const LevelledDigraph& g, std::span<const Vertex> vs) { return g.path_tags(vs); }

json tag_lists(const LevelledDigraph& g, const std::vector<Path>& paths) {
  json a = json::array();
  for (const auto& p : paths) a.push_back(tags(g, p));
  return a;
}

std::string scalar(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "none";
  if (v.is_array()) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + scalar(v[i]);
    return s + "]";
  }
  return v.dump();
}

// same keys, same order as the JSON document
void render_text(const json& j, std::ostream& out, int indent) {
  const std::string pad(indent, ' ');
  for (const auto& [key, v] : j.items()) {
    out << pad << key << ":";
    if (v.is_object()) {
      out << "\n";
      render_text(v, out, indent + 2);
    } else if (v.is_array() && !v.empty() && v.front().is_object()) {
      out << "\n";
      for (const auto& e : v) {
        out << pad << "  -\n";
        render_text(e, out, indent + 4);
      }
    } else if (v.is_array() && !v.empty() && v.front().is_array()) {
      out << "\n";
      for (const auto& e : v) {
        std::string line;
        for (const auto& t : e) line += (line.empty() ? "" : " ") + scalar(t);
        out << pad << "  " << line << "\n";
      }
    } else {
      out << " " << scalar(v) << "\n";
    }
  }
}

void emit(const RunConfig& cfg, const json& report, std::ostream& out) {
  std::ofstream file;
  std::ostream* dst = &out;
  if (!cfg.output.empty()) {
    file.open(cfg.output, std::ios::binary);
    if (!file) throw UsageError("cannot write '" + cfg.output + "'");
    dst = &file;
  }
  if (cfg.format == "json") {
    *dst << report.dump(2) << "\n";
  } else if (cfg.format == "text") {
    render_text(report, *dst, 0);
  } else {
    throw UsageError("format '" + cfg.format + "' is not available for this command");
  }
}

void validate(const RunConfig& cfg) {
  if (cfg.depth < 0) throw UsageError("depth must be >= 0");
  if (cfg.threshold < 1) throw UsageError("threshold must be >= 1");
  if (!cfg.family.empty() && !cfg.input.empty()) throw UsageError("give --family or --input, not both");
}

Presentation need_family(const RunConfig& cfg) {
  if (cfg.family.empty()) throw UsageError("--family is required");
  return family_by_name(cfg.family, cfg.params);
}

LevelledDigraph load_graph(const RunConfig& cfg, Level depth) {
  if (!cfg.input.empty()) return import_json(read_file(cfg.input));
  if (cfg.family.empty()) throw UsageError("--family or --input is required");
  return truncate(family_by_name(cfg.family, cfg.params), depth);
}

std::string end_name(const Presentation& p, const RunConfig& cfg) {
  if (!cfg.end.empty()) {
    (void)p.end(cfg.end);  // UnknownEndError for a bad name
    return cfg.end;
  }
  if (p.ends.empty()) throw UsageError("family '" + p.name + "' declares no end");
  return p.ends.front().name;
}

int cmd_truncate(const RunConfig& cfg, std::ostream& out, const std::string& default_format) {
  RunConfig c = cfg;
  if (c.format.empty()) c.format = default_format;
  const auto g = load_graph(c, static_cast<Level>(c.depth));
  std::string doc;
  if (c.format == "dot") {
    doc = export_dot(g);
  } else if (c.format == "json") {
    doc = export_json(g);
  } else if (c.format == "text") {
    json r;
    r["graph"] = g.name();
    r["depth"] = g.depth();
    r["span"] = g.span();
    r["vertices"] = g.vertex_count();
    r["edges"] = g.edge_count();
    json adj = json::array();
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      json row = json::array({g.tag(v), "->"});
      for (Vertex w : g.out(v)) row.push_back(g.tag(w));
      adj.push_back(row);
    }
    r["adjacency"] = adj;
    std::ostringstream ss;
    render_text(r, ss, 0);
    doc = ss.str();
  } else {
    throw UsageError("unknown format '" + c.format + "'");
  }
  if (c.output.empty()) {
    out << doc;
    if (!doc.empty() && doc.back() != '\n') out << "\n";
  } else {
    std::ofstream file(c.output, std::ios::binary);
    if (!file) throw UsageError("cannot write '" + c.output + "'");
    file << doc;
  }
  return ok;
}

int cmd_menger(const RunConfig& cfg, std::ostream& out) {
  const auto g = load_graph(cfg, static_cast<Level>(cfg.depth));
  const Disjointness mode = parse_disjointness(cfg.mode);
  const auto A = select(g, cfg.sources, "sources");
  const auto B = select(g, cfg.targets, "targets");
  if (cfg.side != "source" && cfg.side != "target") throw UsageError("side must be source or target");
  const bool target_side = cfg.side == "target";
  const auto ps = max_disjoint_dipaths(g, A, B, mode);
  // the target-closest cut is the source-closest cut of the reversed digraph
  const auto rg = target_side ? reverse(g) : LevelledDigraph{};
  const auto& cut_graph = target_side ? rg : g;
  const auto& cut_from = target_side ? B : A;
  const auto& cut_to = target_side ? A : B;
  std::vector<std::string> problems;
  if (auto e = check_path_system(g, ps, A, B)) problems.push_back("paths: " + *e);

  json r;
  r["graph"] = g.name();
  r["depth"] = g.depth();
  r["mode"] = to_string(mode);
  r["side"] = cfg.side;
  r["sources"] = tags(g, A);
  r["targets"] = tags(g, B);
  r["count"] = ps.size();
  r["paths"] = tag_lists(g, ps.paths);
  if (mode == Disjointness::edge) {
    try {
      auto cert = min_edge_separator(cut_graph, cut_from, cut_to);
      if (target_side) {
        for (auto& [u, v] : cert.edges) std::swap(u, v);
        std::swap(cert.sources, cert.targets);
      }
      json edges = json::array();
      for (auto [u, v] : cert.edges) edges.push_back(json::array({g.tag(u), g.tag(v)}));
      r["separator"] = edges;
      if (auto e = check_edge_separator(g, cert)) problems.push_back("separator: " + *e);
      if (cert.edges.size() != ps.size()) problems.push_back("separator size differs from path count");
    } catch (const InfeasibleError& e) {
      r["separator"] = nullptr;
      r["separator_note"] = e.what();
    }
  } else {
    std::vector<Vertex> terminals(A);
    terminals.insert(terminals.end(), B.begin(), B.end());
    std::optional<SeparatorCertificate> cert;
    std::string note;
    // vertex mode still prefers a cut off the terminals when one is minimum
    try {
      cert = min_vertex_separator(cut_graph, cut_from, cut_to, terminals);
      if (mode == Disjointness::vertex && cert->separator.size() != ps.size()) cert.reset();
    } catch (const InfeasibleError& e) {
      note = e.what();
    }
    if (!cert && mode == Disjointness::vertex) cert = min_vertex_separator(cut_graph, cut_from, cut_to, {});
    if (cert) {
      if (target_side) std::swap(cert->sources, cert->targets);
      r["separator"] = tags(g, cert->separator);
      if (auto e = check_separator(g, *cert)) problems.push_back("separator: " + *e);
      if (cert->separator.size() != ps.size()) problems.push_back("separator size differs from path count");
    } else {
      r["separator"] = nullptr;
      r["separator_note"] = note;
    }
  }
  r["certificates"] = problems.empty() ? json("ok") : json(problems);
  emit(cfg, r, out);
  return problems.empty() ? ok : failed;
}

json schema_json(const LevelledDigraph& g, const SchemaResult& s) {
  json j;
  j["name"] = s.name;
  j["sets"] = s.sequence.sets.size();
  j["liminf"] = s.sequence.liminf_size();
  j["verdict"] = s.verdict.pass ? "PASS" : "FAIL";
  if (!s.verdict.pass) {
    j["step"] = s.verdict.index ? json(*s.verdict.index) : json(nullptr);
    j["reason"] = s.verdict.reason;
    j["witness"] = s.verdict.witness ? tags(g, s.verdict.witness->path) : json(nullptr);
  }
  return j;
}

json degree_json(const Presentation& p, const std::string& end, Level depth, std::size_t t) {
  const auto g = truncate(p, depth);
  const auto rep = combined_in_degree(p, g, end, t);
  auto opt = [](const std::optional<Estimate>& e) { return e ? json(e->str()) : json(nullptr); };
  json r;
  r["family"] = p.name;
  r["end"] = rep.end;
  r["depth"] = rep.depth;
  r["threshold"] = rep.threshold;
  r["d_minus"] = rep.d_minus.str();
  r["d_plus"] = opt(rep.d_plus);
  r["Delta_minus"] = opt(rep.delta_cap);
  r["delta_minus"] = rep.delta_small.str();
  r["K_upper"] = opt(rep.K_upper);
  r["K_schema"] = rep.K_schema;
  r["separator"] = tags(g, rep.delta_separator);
  r["dominators"] = tags(g, rep.dominators);
  json plan;
  plan["A"] = rep.plan.A;
  plan["B"] = rep.plan.B;
  plan["S"] = tags(g, rep.plan.S);
  r["plan"] = plan;
  json schemas = json::array();
  for (const auto& s : rep.schemas) schemas.push_back(schema_json(g, s));
  r["schemas"] = schemas;
  r["notes"] = rep.notes;
  return r;
}

int cmd_degree(const RunConfig& cfg, std::ostream& out) {
  if (!cfg.input.empty()) throw UsageError("degree needs --family (ends are declared by families)");
  const auto p = need_family(cfg);
  const auto end = end_name(p, cfg);
  const auto depths = depth_list(cfg);
  if (depths.size() == 1) {
    emit(cfg, degree_json(p, end, depths.front(), static_cast<std::size_t>(cfg.threshold)), out);
    return ok;
  }
  json r;
  json sweep = json::array();
  for (Level d : depths) sweep.push_back(degree_json(p, end, d, static_cast<std::size_t>(cfg.threshold)));
  r["sweep"] = sweep;
  emit(cfg, r, out);
  return ok;
}

json check_report_json(const CheckReport& rep) {
  json r;
  r["subject"] = rep.subject;
  r["depth"] = rep.depth;
  r["result"] = rep.pass() ? "PASS" : "FAIL";
  json checks = json::array();
  for (const auto& c : rep.checks) {
    json j;
    j["name"] = c.name;
    j["result"] = c.pass ? "PASS" : "FAIL";
    j["detail"] = c.detail;
    if (!c.pass) j["witness"] = c.witness;
    checks.push_back(j);
  }
  r["checks"] = checks;
  return r;
}

bool flag(const RunConfig& cfg, const std::string& key) {
  auto it = cfg.params.find(key);
  return it != cfg.params.end() && it->second != "0" && it->second != "false";
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  if (cfg.check == "counterexample" || cfg.check == "edge-counterexample") {
    VerifyCounterexampleOptions opts;
    opts.family.diagonal_row_one = flag(cfg, "diag1");
    opts.retain_diagonals = flag(cfg, "retain_diagonals");
    bool all = true;
    json reports = json::array();
    for (Level d : depth_list(cfg)) {
      if (d < 10) throw UsageError("counterexample checks need depth >= 10");
      const auto rep = cfg.check == "counterexample" ? verify_counterexample(d, opts)
                                                      : verify_edge_counterexample(d, opts);
      all = all && rep.pass();
      reports.push_back(check_report_json(rep));
    }
    if (reports.size() == 1) {
      emit(cfg, reports.front(), out);
    } else {
      json r;
      r["result"] = all ? "PASS" : "FAIL";
      r["sweep"] = reports;
      emit(cfg, r, out);
    }
    return all ? ok : failed;
  }
  if (cfg.check == "exhausting") {
    const auto p = need_family(cfg);
    const auto end = end_name(p, cfg);
    if (cfg.seq.empty()) throw UsageError("--seq is required for the exhausting check");
    const auto sets = import_sequence(read_file(cfg.seq));
    const auto g = truncate(p, static_cast<Level>(cfg.depth));
    const auto seq = sequence_from_tags(g, sets);
    VerifyExhaustingOptions opts;
    opts.check_coverage = !cfg.no_coverage;
    const auto v = verify_exhausting(g, p.end(end), seq, opts);
    json r;
    r["family"] = p.name;
    r["end"] = end;
    r["depth"] = g.depth();
    r["sets"] = seq.sets.size();
    r["liminf"] = seq.liminf_size();
    r["checked_steps"] = v.checked_steps;
    r["result"] = v.pass ? "PASS" : "FAIL";
    if (!v.pass) {
      r["step"] = v.index ? json(*v.index) : json(nullptr);
      r["reason"] = v.reason;
      r["witness"] = v.witness ? tags(g, v.witness->path) : json(nullptr);
    }
    emit(cfg, r, out);
    return v.pass ? ok : failed;
  }
  throw UsageError("unknown check '" + cfg.check + "' (counterexample, edge-counterexample, exhausting)");
}

void add_common(CLI::App* sub, RunConfig& cfg, bool sweep) {
  sub->add_option("--family", cfg.family, "built-in family (" + [] {
    std::string s;
    for (const auto& n : family_names()) s += (s.empty() ? "" : ", ") + n;
    return s;
  }() + ")");
  sub->add_option("--input", cfg.input, "digraph JSON document");
  sub->add_option("--depth", cfg.depth, "truncation depth");
  sub->add_option("-t,--threshold", cfg.threshold, "degree threshold t");
  sub->add_option("--format", cfg.format, "text, json or dot");
  sub->add_option("--output", cfg.output, "write the document here instead of stdout");
  auto* params = sub->add_option_function<std::vector<std::string>>(
      "--param",
      [&cfg](const std::vector<std::string>& kvs) {
        for (const auto& kv : kvs) {
          const auto eq = kv.find('=');
          if (eq == std::string::npos || eq == 0) throw CLI::ValidationError("--param", "expected key=value, got '" + kv + "'");
          cfg.params[kv.substr(0, eq)] = kv.substr(eq + 1);
        }
      },
      "family parameter key=value (repeatable)");
  params->allow_extra_args(false);
  if (sweep) sub->add_option("--depths", cfg.depths, "depth sweep a..b");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Finite-scale analysis of ends of infinite digraphs", "endgraph"};
  app.require_subcommand(1);

  auto* truncate_cmd = app.add_subcommand("truncate", "emit the truncation at a depth");
  add_common(truncate_cmd, cfg, false);
  auto* export_cmd = app.add_subcommand("export", "write the truncation as a JSON or DOT document");
  add_common(export_cmd, cfg, false);
  auto* menger_cmd = app.add_subcommand("menger", "disjoint dipaths and a dual separator");
  add_common(menger_cmd, cfg, false);
  menger_cmd->add_option("--sources", cfg.sources, "selector: tag globs, optional @lo..hi level range, comma separated");
  menger_cmd->add_option("--targets", cfg.targets, "selector, same syntax as --sources");
  menger_cmd->add_option("--mode", cfg.mode, "vertex, internal or edge");
  menger_cmd->add_option("--side", cfg.side, "report the minimum separator closest to the sources or the targets");
  auto* degree_cmd = app.add_subcommand("degree", "degree report of an end");
  add_common(degree_cmd, cfg, true);
  degree_cmd->add_option("--end", cfg.end, "end name (default: first declared end)");
  auto* verify_cmd = app.add_subcommand("verify", "run a check; exit 1 with a witness on failure");
  add_common(verify_cmd, cfg, true);
  verify_cmd->add_option("--check", cfg.check, "counterexample, edge-counterexample or exhausting")->required();
  verify_cmd->add_option("--seq", cfg.seq, "sequence file: JSON array of arrays of vertex ids");
  verify_cmd->add_option("--end", cfg.end, "end name (default: first declared end)");
  verify_cmd->add_flag("--no-coverage", cfg.no_coverage, "skip the coverage half of the exhausting check");

  // truncate and export pick their own default format
  bool format_given = false;
  for (const auto& a : args) format_given = format_given || a == "--format" || a.starts_with("--format=");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : usage;
  }

  try {
    validate(cfg);
    if (truncate_cmd->parsed()) {
      if (!format_given) cfg.format = "text";
      return cmd_truncate(cfg, out, "text");
    }
    if (export_cmd->parsed()) {
      if (!format_given) cfg.format = "json";
      return cmd_truncate(cfg, out, "json");
    }
    if (menger_cmd->parsed()) return cmd_menger(cfg, out);
    if (degree_cmd->parsed()) return cmd_degree(cfg, out);
    if (verify_cmd->parsed()) return cmd_verify(cfg, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  }
  return usage;
}

}  // namespace endgraph::cli
