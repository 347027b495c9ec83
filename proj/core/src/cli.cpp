#include "mobsim/cli.hpp"

#include <cstdint>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "mobsim/config.hpp"
#include "mobsim/metrics.hpp"
#include "mobsim/neighbor_graph.hpp"
#include "mobsim/scenario.hpp"
#include "mobsim/serialize.hpp"
#include "mobsim/sweep.hpp"
#include "mobsim/trace_io.hpp"

namespace mobsim {

namespace {

namespace fs = std::filesystem;

struct GlobalOptions {
  std::string config_path;
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::string out_path;
  std::string format_name = "csv";
};

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw std::runtime_error("cannot read " + path.string());
  return std::move(buffer).str();
}

// Whole-file atomic: the content lands under a temp name and is renamed into
// place, so a crash never leaves a half-written artifact.
void write_file_atomic(const fs::path& path, std::string_view text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  fs::path temp = path;
  temp += ".tmp";
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + temp.string());
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    out.flush();
    if (!out) throw std::runtime_error("cannot write " + temp.string());
  }
  fs::rename(temp, path);
  std::cout << "wrote " << path.string() << '\n';
}

fs::path resolve_output(const GlobalOptions& opts, const char* default_name) {
  if (!opts.out_path.empty()) return fs::path(opts.out_path);
  if (const char* dir = std::getenv("MOBSIM_OUT_DIR"); dir != nullptr && *dir != '\0') {
    return fs::path(dir) / default_name;
  }
  return fs::path(default_name);
}

ScenarioConfig load_config(const GlobalOptions& opts) {
  ScenarioConfig config =
      opts.config_path.empty() ? parse_config("") : parse_config(read_file(opts.config_path));
  if (opts.seed_given) config.seed = opts.seed;
  return config;
}

TraceFormat parse_format(const std::string& name) {
  if (name == "csv") return TraceFormat::CsvTrace;
  if (name == "ns2") return TraceFormat::Ns2Movement;
  throw std::runtime_error("unknown trace format " + name);
}

void run_simulate(const GlobalOptions& opts) {
  ScenarioConfig config = load_config(opts);
  Trace trace = run_simulation(config);
  TraceFormat format = parse_format(opts.format_name);
  const char* default_name = format == TraceFormat::CsvTrace ? "trace.csv" : "trace.ns2";
  write_file_atomic(resolve_output(opts, default_name), export_trace(trace, format));
}

void run_sweep_command(const GlobalOptions& opts) {
  SweepTable sweep = run_speed_sweep(load_config(opts));
  write_file_atomic(resolve_output(opts, "sweep.csv"), emit_sweep_csv(sweep));
}

void run_table2_command(const GlobalOptions& opts) {
  SweepTable sweep = run_speed_sweep(load_config(opts));
  write_file_atomic(resolve_output(opts, "table2.csv"), emit_table2_csv(sweep.rows));
}

void run_fit_command(const GlobalOptions& opts) {
  ScenarioConfig config = load_config(opts);
  SweepTable sweep = run_speed_sweep(config);
  std::vector<double> grid = default_pdf_grid();
  ExperimentReport report = fit_report(sweep, grid, config.scaling);
  fs::path report_path = resolve_output(opts, "fit_report.txt");
  fs::path pdf_path = report_path;
  pdf_path.replace_filename(report_path.stem().string() + "_pdf.csv");
  write_file_atomic(report_path, render_report(report));
  write_file_atomic(pdf_path, emit_pdf_csv(report.pdf_curves));
}

template <typename Fn>
void append_metric_rows(std::vector<std::pair<std::string, double>>& rows, Fn&& compute) {
  try {
    compute(rows);
  } catch (const std::exception&) {
    // Metric undefined for this trace (all nodes paused, coincident, ...):
    // leave its rows out rather than failing the whole command.
  }
}

void run_metrics_command(const GlobalOptions& opts, const std::string& trace_path) {
  ScenarioConfig config = load_config(opts);
  std::string text = read_file(trace_path);
  Trace trace = parse_trace(text, detect_trace_format(text));
  int n = static_cast<int>(trace.node_count());
  const std::size_t lag = 1;
  double k = (config.model.params.v_max - config.model.params.v_min) / n;

  std::vector<std::pair<std::string, double>> rows;
  rows.emplace_back("nodes", static_cast<double>(n));
  rows.emplace_back("snapshots", static_cast<double>(trace.size()));
  rows.emplace_back("lag", static_cast<double>(lag));
  rows.emplace_back("k", k);
  rows.emplace_back("radio_range", config.radio_range);
  append_metric_rows(rows, [&](auto& out) {
    SpeedCorrelationSummary summary = mean_speed_correlation(trace, lag);
    out.emplace_back("speed_correlation_mean", summary.mean);
    out.emplace_back("speed_correlation_pairs_used", static_cast<double>(summary.pairs_used));
    out.emplace_back("speed_correlation_pairs_skipped",
                     static_cast<double>(summary.pairs_skipped));
  });
  append_metric_rows(rows, [&](auto& out) {
    out.emplace_back("distance_correlation", distance_correlation(trace, lag, k));
  });
  append_metric_rows(rows, [&](auto& out) {
    const Snapshot& last = trace.snapshots().back();
    std::vector<std::pair<int, Position>> placed;
    placed.reserve(last.states.size());
    for (const NodeState& node : last.states) placed.emplace_back(node.id, node.position);
    NeighborGraph graph(placed, config.radio_range);
    double total = 0.0;
    for (int id : graph.ids()) total += clustering_coefficient(graph, id);
    out.emplace_back("mean_clustering", total / static_cast<double>(graph.node_count()));
  });
  append_metric_rows(rows, [&](auto& out) {
    std::vector<double> ratios = empirical_speed_ratio(trace, n);
    double total = 0.0;
    for (double ratio : ratios) total += ratio;
    out.emplace_back("empirical_speed_ratio_mean", total / static_cast<double>(ratios.size()));
  });
  write_file_atomic(resolve_output(opts, "metrics.csv"), emit_metrics_csv(rows));
}

void run_export_command(const GlobalOptions& opts, const std::string& input_path) {
  std::string text = read_file(input_path);
  Trace trace = parse_trace(text, detect_trace_format(text));
  TraceFormat format = parse_format(opts.format_name);
  const char* default_name = format == TraceFormat::CsvTrace ? "export.csv" : "export.ns2";
  write_file_atomic(resolve_output(opts, default_name), export_trace(trace, format));
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
  CLI::App app{"mobility-model workbench: simulate node movement, sweep the speed\n"
               "ratio over network sizes, and fit the resulting spread",
               "mobsim"};
  app.require_subcommand(1);

  GlobalOptions opts;
  app.add_option("--config", opts.config_path, "scenario file (key = value lines)");
  CLI::Option* seed_opt =
      app.add_option("--seed", opts.seed, "override the scenario seed");
  app.add_option("--out", opts.out_path, "output file (default: per-command name)");
  app.add_option("--format", opts.format_name, "trace format for simulate/export")
      ->check(CLI::IsMember({"csv", "ns2"}))
      ->capture_default_str();

  CLI::App* simulate = app.add_subcommand("simulate", "run one scenario and write its trace");
  CLI::App* sweep = app.add_subcommand("sweep", "write the speed ratio over the (N, v) grid");
  CLI::App* table2 =
      app.add_subcommand("table2", "write the per-node-count ratio spread (ymin, ymax, k)");
  CLI::App* fit = app.add_subcommand(
      "fit", "fit Pareto shape and decay laws to the sweep; writes report and pdf curves");
  CLI::App* metrics =
      app.add_subcommand("metrics", "compute co-movement and clustering metrics for a trace");
  std::string metrics_trace;
  metrics->add_option("trace", metrics_trace, "movement trace file")
      ->required()
      ->check(CLI::ExistingFile);
  CLI::App* export_cmd = app.add_subcommand("export", "convert a trace to --format");
  std::string export_input;
  export_cmd->add_option("trace", export_input, "movement trace file")
      ->required()
      ->check(CLI::ExistingFile);
  for (CLI::App* sub : {simulate, sweep, table2, fit, metrics, export_cmd}) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    // A stray first token fails the subcommand requirement without being
    // named in the message; recover it so the diagnostic can point at it.
    std::vector<std::string> extras = app.remaining();
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::RequiredError) && !extras.empty()) {
      std::cerr << "mobsim: unknown subcommand: " << extras.front() << '\n';
    } else {
      std::cerr << "mobsim: " << e.what() << '\n';
    }
    std::cerr << app.help();
    return e.get_exit_code() == 0 ? 2 : e.get_exit_code();
  }
  opts.seed_given = seed_opt->count() > 0;

  try {
    if (simulate->parsed()) {
      run_simulate(opts);
    } else if (sweep->parsed()) {
      run_sweep_command(opts);
    } else if (table2->parsed()) {
      run_table2_command(opts);
    } else if (fit->parsed()) {
      run_fit_command(opts);
    } else if (metrics->parsed()) {
      run_metrics_command(opts, metrics_trace);
    } else if (export_cmd->parsed()) {
      run_export_command(opts, export_input);
    }
  } catch (const std::exception& e) {
    std::cerr << "mobsim: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace mobsim
