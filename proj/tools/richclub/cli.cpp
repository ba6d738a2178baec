#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "input.hpp"
#include "report.hpp"
#include "richclub/degree_sequence.hpp"
#include "richclub/error.hpp"
#include "richclub/graph.hpp"
#include "richclub/graphic.hpp"

namespace richclub::cli {

namespace {

struct AnalyzeArgs {
  std::string input;
  std::string output = "-";
  std::string format = "csv";
  std::size_t ensemble_size = 1000;
  std::uint64_t seed = 0;
  Count swaps_per_edge = 10;
  Count max_attempt_factor = 100;
  std::string k_grid;
  bool allow_disconnected = false;
  bool strict_connected_null = false;
  unsigned threads = 0;
};

struct DyadicArgs {
  std::string input;
  std::string attributes;
  std::string output = "-";
  std::string format = "csv";
  bool allow_disconnected = false;
};

struct BoundsArgs {
  std::string input;
  std::string degrees;
  std::string sequence;
  std::string n1;
  bool sweep = false;
  bool check_graphic = false;
  bool allow_disconnected = false;
  std::string output = "-";
  std::string format = "csv";
};

struct RandomizeArgs {
  std::string input;
  std::string output = "-";
  std::uint64_t seed = 0;
  Count swaps_per_edge = 10;
  Count max_attempt_factor = 100;
  std::size_t count = 0;
  bool allow_disconnected = false;
  bool strict_connected = false;
};

// Sends data to `out` for "-", otherwise to the named file.
void emit(const std::string& path, std::ostream& out,
          const std::function<void(std::ostream&)>& write) {
  if (path == "-") {
    write(out);
    out.flush();
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot open '" + path + "' for writing");
  write(file);
  file.close();
  if (!file) throw InputError("write to '" + path + "' failed");
}

unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("RICHCLUB_THREADS"); env && *env) {
    try {
      const auto n = parse_count_list(env);
      if (n.size() == 1 && n[0] > 0) return static_cast<unsigned>(n[0]);
    } catch (const InputError&) {
    }
    throw InputError(std::string("RICHCLUB_THREADS='") + env + "' is not a positive integer");
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

Graph load_graph(const std::string& path, bool allow_disconnected) {
  return load_edge_list_file(path, LoadOptions{allow_disconnected});
}

int cmd_analyze(const AnalyzeArgs& args, std::ostream& out, std::ostream& err) {
  if (args.output == "-" && args.format == "both")
    throw InputError("--format both needs a file --output");
  Graph g = load_graph(args.input, args.allow_disconnected);

  std::vector<Count> grid =
      args.k_grid.empty() ? default_k_grid(g) : parse_count_list(args.k_grid);
  validate_k_grid(g, grid);

  EnsembleConfig cfg;
  cfg.size = args.ensemble_size;
  cfg.master_seed = args.seed;
  cfg.swaps_per_edge = args.swaps_per_edge;
  cfg.max_attempt_factor = args.max_attempt_factor;
  cfg.strict_connected = args.strict_connected_null;
  const unsigned threads = resolve_threads(args.threads);

  err << "analyze: " << g.node_count() << " nodes, " << g.edge_count() << " edges, "
      << grid.size() << " thresholds; " << cfg.size << " replicates on " << threads
      << " thread(s)\n";

  AnalysisReport report;
  report.profile = profile(g, grid);
  report.graph = report.profile.graph;
  report.density = density(g);
  report.normalized = normalize(g, generate_ensemble(g, cfg, grid, threads));
  report.config = cfg;
  report.provenance = {args.input, kToolVersion, cfg.master_seed};

  if (args.format == "csv" || args.format == "both") {
    emit(args.output == "-" ? "-" : args.output + ".csv", out,
         [&](std::ostream& s) { write_analysis_csv(s, report); });
  }
  if (args.format == "json" || args.format == "both") {
    emit(args.output == "-" ? "-" : args.output + ".json", out,
         [&](std::ostream& s) { write_analysis_json(s, report); });
  }
  err << "analyze: done\n";
  return kExitOk;
}

int cmd_dyadic(const DyadicArgs& args, std::ostream& out, std::ostream&) {
  Graph g = load_graph(args.input, args.allow_disconnected);
  std::ifstream attr(args.attributes);
  if (!attr) throw InputError("cannot open '" + args.attributes + "'");
  const Characteristic c = read_characteristic(attr, g, args.attributes);

  DyadicReport r;
  r.counts = count_dyads(g, c);
  r.n1 = c.n1();
  r.n0 = c.n0();
  r.expectation = expected_dyads(g, r.n1);
  try {
    r.dyadicity = dyadicity(r.counts, r.expectation);
  } catch (const UndefinedError&) {
  }
  try {
    r.heterophilicity = heterophilicity(r.counts, r.expectation);
  } catch (const UndefinedError&) {
  }
  const auto ds = degree_sequence(g);
  r.ub_m11 = ub_m11(ds, r.n1);
  r.ub_m10 = ub_m10(ds, r.n1);

  emit(args.output, out, [&](std::ostream& s) {
    if (args.format == "json") {
      write_dyadic_json(s, r);
    } else {
      write_dyadic_csv(s, r);
    }
  });
  return kExitOk;
}

int cmd_bounds(const BoundsArgs& args, std::ostream& out, std::ostream& err) {
  const int sources = !args.input.empty() + !args.degrees.empty() + !args.sequence.empty();
  if (sources != 1) throw InputError("give exactly one of --input, --degrees, --sequence");
  if (args.sweep == !args.n1.empty()) throw InputError("give exactly one of --n1, --sweep");

  std::vector<std::int64_t> raw;
  if (!args.input.empty()) {
    Graph g = load_graph(args.input, args.allow_disconnected);
    for (NodeId v = 0; v < g.node_count(); ++v) raw.push_back(static_cast<std::int64_t>(g.degree(v)));
  } else if (!args.degrees.empty()) {
    std::ifstream in(args.degrees);
    if (!in) throw InputError("cannot open '" + args.degrees + "'");
    raw = read_degree_list(in, args.degrees);
  } else {
    raw = parse_degree_list(args.sequence);
  }

  const auto check = check_graphic(raw);
  if (!check.graphic) {
    if (args.check_graphic) throw ValidationError("sequence is not graphic: " + check.reason);
    err << "bounds: warning: sequence is not graphic (" << check.reason << ")\n";
  }
  std::vector<Count> degrees(raw.begin(), raw.end());
  const DegreeSequence ds(std::move(degrees));

  std::vector<Count> n1_values;
  if (args.sweep) {
    for (Count n1 = 0; n1 <= ds.size(); ++n1) n1_values.push_back(n1);
  } else {
    n1_values = parse_count_list(args.n1);
  }
  std::vector<BoundsRow> rows;
  for (Count n1 : n1_values) {
    if (n1 > ds.size())
      throw BoundsError("n1 = " + std::to_string(n1) + " exceeds sequence length " +
                        std::to_string(ds.size()));
    rows.push_back({n1, ds.size() - n1, dyad_bounds(ds, n1)});
  }
  emit(args.output, out, [&](std::ostream& s) {
    if (args.format == "json") {
      write_bounds_json(s, rows);
    } else {
      write_bounds_csv(s, rows);
    }
  });
  return kExitOk;
}

std::string numbered_path(const std::string& path, std::size_t i) {
  std::filesystem::path p(path);
  std::string name = p.stem().string() + "_" + std::to_string(i) + p.extension().string();
  return (p.parent_path() / name).string();
}

int cmd_randomize(const RandomizeArgs& args, std::ostream& out, std::ostream& err) {
  Graph g = load_graph(args.input, args.allow_disconnected);
  if (g.edge_count() < 2)
    throw DegenerateGraphError("randomization needs at least two edges, graph has " +
                               std::to_string(g.edge_count()));
  if (args.count > 0 && args.output == "-") throw InputError("--count needs a file --output");

  EnsembleConfig cfg;
  cfg.master_seed = args.seed;
  cfg.swaps_per_edge = args.swaps_per_edge;
  cfg.max_attempt_factor = args.max_attempt_factor;
  cfg.strict_connected = args.strict_connected;

  const std::size_t files = args.count == 0 ? 1 : args.count;
  for (std::size_t i = 0; i < files; ++i) {
    const Graph replicate = draw_replicate(g, cfg, i);
    const std::string path = args.count == 0 ? args.output : numbered_path(args.output, i);
    emit(path, out, [&](std::ostream& s) {
      s << "# randomized from " << args.input << " seed=" << args.seed << " replicate=" << i
        << '\n';
      write_edge_list(s, replicate);
    });
  }
  err << "randomize: wrote " << files << " graph(s)\n";
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rich-club and dyadic-effect analysis of undirected simple graphs", "richclub"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  const std::vector<std::string> formats{"csv", "json"};

  AnalyzeArgs analyze;
  auto* a = app.add_subcommand("analyze", "Per-k rich-club profile normalized by a null ensemble");
  a->add_option("--input", analyze.input, "Edge-list file")->required();
  a->add_option("--output", analyze.output, "Output prefix (<out>.csv, <out>.json) or - for stdout");
  a->add_option("--format", analyze.format, "csv, json or both")
      ->check(CLI::IsMember({"csv", "json", "both"}));
  a->add_option("--ensemble-size", analyze.ensemble_size, "Number of randomized replicates")
      ->check(CLI::PositiveNumber);
  a->add_option("--seed", analyze.seed, "Master seed");
  a->add_option("--swaps-per-edge", analyze.swaps_per_edge, "Successful swaps per edge")
      ->check(CLI::PositiveNumber);
  a->add_option("--max-attempt-factor", analyze.max_attempt_factor, "Swap proposals per edge cap")
      ->check(CLI::PositiveNumber);
  a->add_option("--k-grid", analyze.k_grid, "Comma-separated thresholds (default: breakpoints)");
  a->add_flag("--allow-disconnected", analyze.allow_disconnected, "Accept disconnected input");
  a->add_flag("--strict-connected-null", analyze.strict_connected_null,
              "Redraw disconnected replicates");
  a->add_option("--threads", analyze.threads, "Worker threads (default: RICHCLUB_THREADS or all)");

  DyadicArgs dyadic;
  auto* d = app.add_subcommand("dyadic", "Dyad counts, expectations, D, H and bounds for a labeling");
  d->add_option("--input", dyadic.input, "Edge-list file")->required();
  d->add_option("--attributes", dyadic.attributes, "label<TAB>0|1 file")->required();
  d->add_option("--output", dyadic.output, "Output file or - for stdout");
  d->add_option("--format", dyadic.format, "csv or json")->check(CLI::IsMember(formats));
  d->add_flag("--allow-disconnected", dyadic.allow_disconnected, "Accept disconnected input");

  BoundsArgs bounds;
  auto* b = app.add_subcommand("bounds", "Upper bounds on m11 and m10 from a degree sequence");
  b->add_option("--input", bounds.input, "Edge-list file");
  b->add_option("--degrees", bounds.degrees, "File of whitespace-separated degrees");
  b->add_option("--sequence", bounds.sequence, "Degrees inline, e.g. \"4 1 1 1 1\"");
  b->add_option("--n1", bounds.n1, "Comma-separated n1 values");
  b->add_flag("--sweep", bounds.sweep, "All n1 from 0 to N");
  b->add_flag("--check-graphic", bounds.check_graphic, "Fail unless the sequence is graphic");
  b->add_flag("--allow-disconnected", bounds.allow_disconnected, "Accept disconnected input");
  b->add_option("--output", bounds.output, "Output file or - for stdout");
  b->add_option("--format", bounds.format, "csv or json")->check(CLI::IsMember(formats));

  RandomizeArgs randomize;
  auto* r = app.add_subcommand("randomize", "Degree-preserving rewiring of an edge list");
  r->add_option("--input", randomize.input, "Edge-list file")->required();
  r->add_option("--output", randomize.output, "Output file (with --count: <stem>_<i><ext>)");
  r->add_option("--seed", randomize.seed, "Master seed");
  r->add_option("--swaps-per-edge", randomize.swaps_per_edge, "Successful swaps per edge")
      ->check(CLI::PositiveNumber);
  r->add_option("--max-attempt-factor", randomize.max_attempt_factor,
                "Swap proposals per edge cap")
      ->check(CLI::PositiveNumber);
  r->add_option("--count", randomize.count, "Number of replicates to write");
  r->add_flag("--allow-disconnected", randomize.allow_disconnected, "Accept disconnected input");
  r->add_flag("--strict-connected", randomize.strict_connected, "Redraw disconnected replicates");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }

  try {
    if (a->parsed()) return cmd_analyze(analyze, out, err);
    if (d->parsed()) return cmd_dyadic(dyadic, out, err);
    if (b->parsed()) return cmd_bounds(bounds, out, err);
    if (r->parsed()) return cmd_randomize(randomize, out, err);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitInternal;
}

}  // namespace richclub::cli
