#include "yoke/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>

#include "CLI11.hpp"
#include "json.hpp"
#include "yoke/audits.hpp"
#include "yoke/metrics.hpp"
#include "yoke/paths.hpp"

namespace yoke::cli {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t ms_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

Family parse_family(const std::string& s) {
  if (s == "yoke") return Family::Yoke;
  if (s == "dyoke") return Family::DYoke;
  throw Error(ErrorKind::ParseError, "unknown family '" + s + "'");
}

InstanceBudget budget_from(std::uint64_t flag) {
  return flag > 0 ? InstanceBudget::with_vertices(flag) : InstanceBudget::single_source();
}

/// Writes to --out when given, else to the command's stdout.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw Error(ErrorKind::ParseError, "cannot open " + path);
      stream_ = file_.get();
    }
  }
  std::ostream& get() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

struct Options {
  int n = 1;
  int m = 0;
  std::string family;
  std::string method = "both";
  std::string from;
  std::string to;
  bool path = false;
  std::string n_range;
  std::string m_range;
  std::uint64_t budget = 0;
  std::string out;
  std::string format = "dot";
};

int cmd_diam(const Options& o, std::ostream& out) {
  const Family family = o.family.empty() ? Family::Yoke : parse_family(o.family);
  const auto start = Clock::now();
  DiameterReport r;
  r.n = o.n;
  r.m = o.m;
  r.family = family;
  const DiameterCase c = diameter_formula(o.n, o.m);
  r.formula_value = c.value;
  r.case_tag = c.tag;
  if (o.method != "formula") {
    const InstanceBudget all_pairs = InstanceBudget::all_pairs();
    if (family == Family::Yoke && all_pairs.admits(GraphParams::yoke(o.n, o.m))) {
      r.bfs_value = diameter_bfs(GraphParams::yoke(o.n, o.m), all_pairs);
      r.bfs_route = "all-pairs";
    } else {
      r.bfs_value = eccentricity(Vertex::zero(GraphParams::dyoke(o.n, o.m)), budget_from(o.budget));
      r.bfs_route = "ecc-dyoke-zero";
    }
    r.match = *r.bfs_value == r.formula_value;
  }
  r.elapsed_ms = ms_since(start);
  out << to_jsonl(r) << '\n';
  return r.match ? kExitOk : kExitMismatch;
}

int cmd_dist(const Options& o, std::ostream& out) {
  Family family = Family::Yoke;
  if (!o.family.empty()) {
    family = parse_family(o.family);
  } else if (o.from.find('-') != std::string::npos || o.to.find('-') != std::string::npos) {
    family = Family::DYoke;
  }
  const GraphParams params(o.n, o.m, family);
  const Vertex a = parse_vertex(o.from, params);
  const Vertex b = parse_vertex(o.to, params);
  const Path p = geodesic(a, b, budget_from(o.budget));
  out << p.length() << '\n';
  if (o.path) out << render_word(word_of_path(p)) << '\n';
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const auto [n_lo, n_hi] = parse_range(o.n_range);
  const auto [m_lo, m_hi] = parse_range(o.m_range);
  if (n_lo < 1 || m_lo < 0) throw Error(ErrorKind::ParseError, "need n >= 1 and m >= 0");
  const InstanceBudget single = budget_from(o.budget);
  InstanceBudget all_pairs = InstanceBudget::all_pairs();
  if (o.budget > 0 && o.budget < all_pairs.max_vertices) all_pairs = InstanceBudget::with_vertices(o.budget);
  Sink sink(o.out, out);
  int records = 0, mismatches = 0, skips = 0;
  for (int n = n_lo; n <= n_hi; ++n) {
    for (int m = m_lo; m <= m_hi; ++m) {
      const auto start = Clock::now();
      DiameterReport r;
      r.n = n;
      r.m = m;
      r.report_all_pairs = true;
      const DiameterCase c = diameter_formula(n, m);
      r.formula_value = c.value;
      r.case_tag = c.tag;
      if (single.admits(GraphParams::dyoke(n, m))) {
        r.bfs_value = eccentricity(Vertex::zero(GraphParams::dyoke(n, m)), single);
        r.bfs_route = "ecc-dyoke-zero";
      } else {
        r.skipped = true;
        ++skips;
      }
      if (all_pairs.admits(GraphParams::yoke(n, m))) {
        r.all_pairs_value = diameter_bfs(GraphParams::yoke(n, m), all_pairs);
      }
      r.match = (!r.bfs_value || *r.bfs_value == r.formula_value) &&
                (!r.all_pairs_value || *r.all_pairs_value == r.formula_value);
      r.elapsed_ms = ms_since(start);
      sink.get() << to_jsonl(r) << '\n';
      sink.get().flush();
      ++records;
      if (!r.match) ++mismatches;
    }
  }
  err << "verify: " << records << " records, " << mismatches << " mismatches, " << skips
      << " skipped over budget\n";
  return mismatches == 0 ? kExitOk : kExitMismatch;
}

int cmd_check_lemmas(const Options& o, std::ostream& out) {
  const LemmaAuditor auditor(o.n, o.m, budget_from(o.budget));
  bool all = true;
  for (const AuditResult& a : auditor.run_all()) {
    out << (a.passed ? "PASS " : "FAIL ") << a.name << ": " << a.detail << '\n';
    all = all && a.passed;
  }
  return all ? kExitOk : kExitMismatch;
}

int cmd_export(const Options& o, std::ostream& out) {
  const Family family = o.family.empty() ? Family::Yoke : parse_family(o.family);
  const GraphParams params(o.n, o.m, family);
  if (o.format != "dot" && o.format != "jsonl") {
    throw Error(ErrorKind::ParseError, "unknown format '" + o.format + "'");
  }
  const std::vector<Vertex> vertices = enumerate_vertices(params, budget_from(o.budget));
  Sink sink(o.out, out);
  std::ostream& s = sink.get();
  if (o.format == "jsonl") {
    for (const Vertex& v : vertices) {
      nlohmann::ordered_json rec;
      rec["v"] = render(v);
      rec["neighbors"] = nlohmann::ordered_json::array();
      for (const Vertex& w : neighbors(v)) rec["neighbors"].push_back(render(w));
      s << rec.dump() << '\n';
    }
    return kExitOk;
  }
  s << "graph \"" << (family == Family::Yoke ? "Y" : "Z") << "(" << o.n << "," << o.m << ")\" {\n";
  for (const Vertex& v : vertices) s << "  \"" << render(v) << "\";\n";
  for (const Vertex& v : vertices) {
    for (const Vertex& w : neighbors(v)) {
      if (v < w) s << "  \"" << render(v) << "\" -- \"" << render(w) << "\";\n";
    }
  }
  s << "}\n";
  return kExitOk;
}

}  // namespace

std::string to_jsonl(const DiameterReport& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["m"] = r.m;
  j["family"] = std::string(to_string(r.family));
  j["formula_value"] = r.formula_value;
  j["bfs_value"] = r.bfs_value ? nlohmann::ordered_json(*r.bfs_value) : nlohmann::ordered_json();
  if (!r.bfs_route.empty()) j["bfs_route"] = r.bfs_route;
  if (r.report_all_pairs) {
    j["all_pairs_value"] =
        r.all_pairs_value ? nlohmann::ordered_json(*r.all_pairs_value) : nlohmann::ordered_json();
  }
  j["case_tag"] = std::string(to_string(r.case_tag));
  j["match"] = r.match;
  if (r.skipped) j["skipped"] = "budget";
  j["elapsed_ms"] = r.elapsed_ms;
  return j.dump();
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  auto bad = [&] { return Error(ErrorKind::ParseError, "bad range '" + text + "', expected A..B"); };
  if (dots == std::string::npos) throw bad();
  try {
    std::size_t used = 0;
    const std::string a = text.substr(0, dots);
    const std::string b = text.substr(dots + 2);
    const int lo = std::stoi(a, &used);
    if (used != a.size()) throw bad();
    const int hi = std::stoi(b, &used);
    if (used != b.size()) throw bad();
    if (lo > hi) throw Error(ErrorKind::ParseError, "empty range '" + text + "'");
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw bad();
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Yoke and dYoke graph toolkit: diameters, distances, audits, export", "yokelab"};
  app.require_subcommand(1);
  Options o;

  auto* diam = app.add_subcommand("diam", "Diameter of Y(n,m): closed form and/or BFS");
  diam->add_option("--n", o.n)->required();
  diam->add_option("--m", o.m)->required();
  diam->add_option("--method", o.method)->check(CLI::IsMember({"formula", "bfs", "both"}));
  diam->add_option("--family", o.family)->check(CLI::IsMember({"yoke", "dyoke"}));
  diam->add_option("--budget", o.budget, "Vertex budget for single-source BFS");

  auto* dist = app.add_subcommand("dist", "Distance between two vertices");
  dist->add_option("--family", o.family)->check(CLI::IsMember({"yoke", "dyoke"}));
  dist->add_option("--n", o.n)->required();
  dist->add_option("--m", o.m)->required();
  dist->add_option("--from", o.from)->required();
  dist->add_option("--to", o.to)->required();
  dist->add_flag("--path", o.path, "Also print the word of a geodesic");
  dist->add_option("--budget", o.budget);

  auto* verify = app.add_subcommand("verify", "Sweep formula against BFS over a range of (n,m)");
  verify->add_option("--n-range", o.n_range)->required();
  verify->add_option("--m-range", o.m_range)->required();
  verify->add_option("--budget", o.budget);
  verify->add_option("--out", o.out);

  auto* lemmas = app.add_subcommand("check-lemmas", "Run the structural audits on one instance");
  lemmas->add_option("--n", o.n)->required();
  lemmas->add_option("--m", o.m)->required();
  lemmas->add_option("--budget", o.budget);

  auto* exp = app.add_subcommand("export", "Write a graph as Graphviz dot or JSON lines");
  exp->add_option("--family", o.family)->check(CLI::IsMember({"yoke", "dyoke"}));
  exp->add_option("--n", o.n)->required();
  exp->add_option("--m", o.m)->required();
  exp->add_option("--format", o.format)->check(CLI::IsMember({"dot", "jsonl"}));
  exp->add_option("--out", o.out);
  exp->add_option("--budget", o.budget);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (diam->parsed()) return cmd_diam(o, out);
    if (dist->parsed()) return cmd_dist(o, out);
    if (verify->parsed()) return cmd_verify(o, out, err);
    if (lemmas->parsed()) return cmd_check_lemmas(o, out);
    if (exp->parsed()) return cmd_export(o, out);
  } catch (const Error& e) {
    err << "yokelab: " << e.what() << '\n';
    return e.kind() == ErrorKind::Disconnected ? kExitMismatch : kExitUsage;
  }
  return kExitUsage;
}

}  // namespace yoke::cli
