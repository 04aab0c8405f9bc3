// Copyright 2026 The fourcycle Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fourcycle/bench.h"
#include "fourcycle/count.h"
#include "fourcycle/edge_index.h"
#include "fourcycle/errors.h"
#include "fourcycle/graph.h"
#include "fourcycle/hash_variants.h"
#include "fourcycle/oracle.h"
#include "fourcycle/verify.h"

namespace fourcycle::cli {
namespace {

using Json = nlohmann::ordered_json;

enum class Format { kTsv, kJson };

struct RunConfig {
  std::string input_path;
  std::string grid_spec;
  Format format = Format::kTsv;
  int repetitions = 3;
  int warmups = 1;
  bool strict = false;
  bool remap = false;
  std::string quantity = "all";
  std::string variant = "all";
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Input {
  Graph graph;
  std::string label;
  std::optional<LoadReport> report;
};

std::pair<std::uint64_t, std::uint64_t> parse_grid(const std::string& spec) {
  const auto x = spec.find('x');
  std::uint64_t rows = 0;
  std::uint64_t cols = 0;
  auto parse = [](std::string_view s, std::uint64_t& out) {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return !s.empty() && ec == std::errc() && ptr == s.data() + s.size();
  };
  if (x == std::string::npos || !parse(std::string_view(spec).substr(0, x), rows) ||
      !parse(std::string_view(spec).substr(x + 1), cols) || rows == 0 || cols == 0) {
    throw UsageError("--grid expects RxC with positive integers, got '" + spec + "'");
  }
  return {rows, cols};
}

Input load_input(const RunConfig& cfg) {
  if (cfg.input_path.empty() == cfg.grid_spec.empty()) {
    throw UsageError("give exactly one of an input path or --grid RxC");
  }
  if (!cfg.grid_spec.empty()) {
    const auto [rows, cols] = parse_grid(cfg.grid_spec);
    return {gen_grid(rows, cols), "grid-" + cfg.grid_spec, std::nullopt};
  }
  std::ifstream file(cfg.input_path);
  if (!file) {
    throw Error(ErrorCode::kIo, "cannot open '" + cfg.input_path + "'");
  }
  LoadResult loaded = load_edge_list(file, {cfg.strict, cfg.remap});
  return {std::move(loaded.graph), cfg.input_path, loaded.report};
}

void ensure_written(std::ostream& out) {
  if (!out) throw Error(ErrorCode::kIo, "write to output failed");
}

std::string format_fixed(double x) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(6) << x;
  return s.str();
}

const char* pass_fail(bool ok) { return ok ? "pass" : "fail"; }

int cmd_count(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Input in = load_input(cfg);
  const Graph& g = in.graph;
  const std::uint64_t c4 = count_global(g);
  const std::optional<double> degeneracy =
      g.num_edges() > 0 ? std::optional<double>(avg_degeneracy(g)) : std::nullopt;

  if (cfg.format == Format::kJson) {
    Json j;
    j["graph"] = in.label;
    j["n"] = g.num_vertices();
    j["m_undirected"] = g.num_edges();
    j["half_edges"] = g.num_half_edges();
    j["max_degree"] = g.max_degree();
    j["avg_degeneracy"] = degeneracy ? Json(*degeneracy) : Json(nullptr);
    j["c4"] = c4;
    if (in.report) {
      j["duplicates_dropped"] = in.report->duplicates_dropped;
      j["self_loops_dropped"] = in.report->self_loops_dropped;
    }
    out << j.dump(2) << '\n';
  } else {
    out << "graph\t" << in.label << '\n'
        << "n\t" << g.num_vertices() << '\n'
        << "m_undirected\t" << g.num_edges() << '\n'
        << "half_edges\t" << g.num_half_edges() << '\n'
        << "max_degree\t" << g.max_degree() << '\n'
        << "avg_degeneracy\t" << (degeneracy ? format_fixed(*degeneracy) : "null") << '\n'
        << "c4\t" << c4 << '\n';
    if (in.report) {
      out << "duplicates_dropped\t" << in.report->duplicates_dropped << '\n'
          << "self_loops_dropped\t" << in.report->self_loops_dropped << '\n';
    }
  }
  if (!degeneracy) err << "note: average degeneracy is undefined for a graph with no edges\n";
  ensure_written(out);
  return kExitOk;
}

int cmd_vertex(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const Input in = load_input(cfg);
  const Graph& g = in.graph;
  Workspace ws;
  const std::vector<std::uint64_t> local = count_per_vertex(g, ws);
  const std::uint64_t c4 = count_global(g, ws);
  const bool identity = vertex_sum_identity(local, c4);
  if (cfg.format == Format::kJson) {
    Json j;
    j["graph"] = in.label;
    j["per_vertex"] = local;
    j["c4"] = c4;
    j["identity"] = pass_fail(identity);
    out << j.dump() << '\n';
  } else {
    for (std::size_t v = 0; v < local.size(); ++v) out << v << '\t' << local[v] << '\n';
    out << "# c4\t" << c4 << "\tquarter_sum_identity\t" << pass_fail(identity) << '\n';
  }
  ensure_written(out);
  return identity ? kExitOk : kExitVerifyFailed;
}

int cmd_edge(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const Input in = load_input(cfg);
  const Graph& g = in.graph;
  Workspace ws;
  const EdgeCounts local = count_per_edge(g, ws);
  const std::uint64_t c4 = count_global(g, ws);
  const bool identity = edge_sum_identity(local, c4);
  const EdgeIndex index(g);
  if (cfg.format == Format::kJson) {
    Json edges = Json::array();
    index.for_each([&](std::size_t k, Vertex lo, Vertex hi) {
      edges.push_back({lo, hi, local[k]});
    });
    Json j;
    j["graph"] = in.label;
    j["per_edge"] = std::move(edges);
    j["c4"] = c4;
    j["identity"] = pass_fail(identity);
    out << j.dump() << '\n';
  } else {
    index.for_each([&](std::size_t k, Vertex lo, Vertex hi) {
      out << lo << '\t' << hi << '\t' << local[k] << '\n';
    });
    out << "# c4\t" << c4 << "\tquarter_sum_identity\t" << pass_fail(identity) << '\n';
  }
  ensure_written(out);
  return identity ? kExitOk : kExitVerifyFailed;
}

int cmd_enumerate(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const Input in = load_input(cfg);
  const bool json = cfg.format == Format::kJson;
  bool first = true;
  if (json) out << "{\"cycles\":[";
  const std::uint64_t total = enumerate_cycles(in.graph, [&](const CycleTuple& t) {
    if (json) {
      out << (first ? "" : ",") << '[' << t.v << ',' << t.u << ',' << t.y << ',' << t.x << ']';
      first = false;
    } else {
      out << t.v << '\t' << t.u << '\t' << t.y << '\t' << t.x << '\n';
    }
    ensure_written(out);
  });
  if (json) {
    out << "],\"total\":" << total << "}\n";
  } else {
    out << "total\t" << total << '\n';
  }
  ensure_written(out);
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Input in = load_input(cfg);
  const VerifyReport report = verify_graph(in.graph);
  if (cfg.format == Format::kJson) {
    Json checks = Json::array();
    for (const CheckResult& c : report.checks) {
      checks.push_back({{"check", c.name}, {"result", pass_fail(c.pass)}, {"detail", c.detail}});
    }
    Json j;
    j["graph"] = in.label;
    j["c4"] = report.global;
    j["checks"] = std::move(checks);
    j["result"] = pass_fail(report.ok());
    out << j.dump(2) << '\n';
  } else {
    for (const CheckResult& c : report.checks) {
      out << c.name << '\t' << pass_fail(c.pass);
      if (!c.pass) out << '\t' << c.detail;
      out << '\n';
    }
    out << "c4\t" << report.global << '\n' << "result\t" << pass_fail(report.ok()) << '\n';
  }
  ensure_written(out);
  if (const CheckResult* bad = report.first_failure()) {
    err << "verification failed at " << bad->name << ": " << bad->detail << '\n';
    return kExitVerifyFailed;
  }
  return kExitOk;
}

std::vector<Quantity> parse_quantities(const std::string& s) {
  if (s == "global") return {Quantity::kGlobal};
  if (s == "vertex") return {Quantity::kVertex};
  if (s == "edge") return {Quantity::kEdge};
  return {Quantity::kGlobal, Quantity::kVertex, Quantity::kEdge};
}

std::vector<Variant> parse_variants(const std::string& s) {
  if (s == "array") return {Variant::kArray};
  if (s == "map") return {Variant::kMap};
  return {Variant::kArray, Variant::kMap};
}

int cmd_bench(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Input in = load_input(cfg);
  BenchOptions options;
  options.repetitions = cfg.repetitions;
  options.warmups = cfg.warmups;
  options.quantities = parse_quantities(cfg.quantity);
  options.variants = parse_variants(cfg.variant);
  const BenchRun run = run_bench(in.graph, in.label, options);

  if (cfg.format == Format::kJson) {
    Json records = Json::array();
    for (const BenchRecord& r : run.records) {
      records.push_back({{"algorithm", r.algorithm},
                         {"variant", r.variant},
                         {"graph", r.graph},
                         {"n", r.n},
                         {"m_undirected", r.m},
                         {"seconds", r.seconds},
                         {"repetitions", r.repetitions},
                         {"warmups", r.warmups},
                         {"result", r.result}});
    }
    Json ratios = Json::array();
    for (const BenchRatio& r : run.ratios) {
      ratios.push_back({{"quantity", quantity_name(r.quantity)}, {"map_over_array", r.map_over_array}});
    }
    Json j;
    j["records"] = std::move(records);
    j["ratios"] = std::move(ratios);
    out << j.dump(2) << '\n';
  } else {
    out << "algorithm\tvariant\tgraph\tn\tm_undirected\tseconds\trepetitions\twarmups\tresult\n";
    for (const BenchRecord& r : run.records) {
      out << r.algorithm << '\t' << r.variant << '\t' << r.graph << '\t' << r.n << '\t' << r.m
          << '\t' << std::setprecision(6) << r.seconds << '\t' << r.repetitions << '\t'
          << r.warmups << '\t' << r.result << '\n';
    }
    for (const BenchRatio& r : run.ratios) {
      out << "ratio\t" << quantity_name(r.quantity) << "\tmap_over_array\t" << std::setprecision(4)
          << r.map_over_array << '\n';
    }
  }
  ensure_written(out);
  if (!run.results_agree) {
    err << "bench: result counts differ between variants\n";
    return kExitVerifyFailed;
  }
  return kExitOk;
}

int cmd_generate(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const Input in = load_input(cfg);
  out << "# " << in.label << " n=" << in.graph.num_vertices()
      << " m_undirected=" << in.graph.num_edges() << '\n';
  write_edge_list(in.graph, out);
  ensure_written(out);
  return kExitOk;
}

int exit_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return kExitUsage;
    case ErrorCode::kParse:
    case ErrorCode::kRejected:
    case ErrorCode::kIo:
    case ErrorCode::kUndefined:
      return kExitIo;
    case ErrorCode::kOverflow:
    case ErrorCode::kCapExceeded:
      return kExitOverflow;
  }
  return kExitIo;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Count, localize and enumerate 4-cycles in sparse undirected graphs"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("input", cfg.input_path, "Edge-list file ('u v' per line)");
    sub->add_option("--grid", cfg.grid_spec, "Generate an R x C grid instead of reading a file")
        ->type_name("RxC");
    sub->add_option("--format", cfg.format, "Output format")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, Format>{{"tsv", Format::kTsv}, {"json", Format::kJson}}));
    sub->add_flag("--strict", cfg.strict, "Reject duplicate edges and self-loops");
    sub->add_flag("--remap", cfg.remap, "Densify arbitrary IDs in first-appearance order");
  };

  struct Command {
    const char* name;
    const char* help;
    int (*fn)(const RunConfig&, std::ostream&, std::ostream&);
  };
  const Command commands[] = {
      {"count", "Global 4-cycle count and graph statistics", cmd_count},
      {"vertex", "4-cycle count through every vertex", cmd_vertex},
      {"edge", "4-cycle count through every edge", cmd_edge},
      {"enumerate", "List every distinct 4-cycle", cmd_enumerate},
      {"verify", "Cross-check all variants against brute-force oracles", cmd_verify},
      {"bench", "Time array passes against map-based passes", cmd_bench},
      {"generate", "Write a generated graph as an edge list", cmd_generate},
  };
  std::vector<std::pair<CLI::App*, const Command*>> subs;
  for (const Command& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    add_common(sub);
    if (std::string_view(c.name) == "bench") {
      sub->add_option("--reps", cfg.repetitions, "Timed repetitions (median reported)")
          ->check(CLI::PositiveNumber);
      sub->add_option("--warmups", cfg.warmups, "Untimed warmup runs")
          ->check(CLI::NonNegativeNumber);
      sub->add_option("--quantity", cfg.quantity, "global|vertex|edge|all")
          ->check(CLI::IsMember({"global", "vertex", "edge", "all"}));
      sub->add_option("--variant", cfg.variant, "array|map|all")
          ->check(CLI::IsMember({"array", "map", "all"}));
    }
    subs.emplace_back(sub, &c);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e, out, err);
    return status == 0 ? kExitOk : kExitUsage;
  }

  for (const auto& [sub, command] : subs) {
    if (!sub->parsed()) continue;
    try {
      return command->fn(cfg, out, err);
    } catch (const UsageError& e) {
      err << "usage error: " << e.what() << '\n';
      return kExitUsage;
    } catch (const Error& e) {
      err << error_code_name(e.code()) << ": " << e.what() << '\n';
      return exit_status(e.code());
    } catch (const std::bad_alloc&) {
      err << "out of memory\n";
      return kExitOverflow;
    }
  }
  return kExitUsage;
}

}  // namespace fourcycle::cli
