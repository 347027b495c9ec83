// Acceptance harness: runs one check per release criterion and prints a
// single [PASS]/[FAIL] line for each. Exit status is the failure count.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "mobsim/cli.hpp"
#include "mobsim/config.hpp"
#include "mobsim/fitting.hpp"
#include "mobsim/metrics.hpp"
#include "mobsim/mobility.hpp"
#include "mobsim/rng.hpp"
#include "mobsim/samplers.hpp"
#include "mobsim/scenario.hpp"
#include "mobsim/serialize.hpp"
#include "mobsim/sweep.hpp"
#include "mobsim/trace_io.hpp"

namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

using mobsim::AxisState;
using mobsim::AxisWalkState;
using mobsim::ModelKind;

void require(bool ok, const std::string& what) {
  if (!ok) throw std::runtime_error(what);
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

double relative_gap(double got, double reference) {
  return std::abs(got - reference) / std::abs(reference);
}

fs::path work_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "mobsim_acceptance";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

int run_cli(const std::vector<std::string>& args) {
  std::vector<const char*> argv;
  argv.push_back("mobsim");
  for (const std::string& arg : args) argv.push_back(arg.c_str());
  return mobsim::cli_main(static_cast<int>(argv.size()), argv.data());
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  require(in.good(), "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::vector<mobsim::NodeState> spread_nodes(int count, const mobsim::Area& area) {
  std::vector<mobsim::NodeState> nodes(count);
  mobsim::Rng placer(99);
  for (int i = 0; i < count; ++i) {
    nodes[i].id = i;
    nodes[i].position = {placer.uniform(0.0, area.width), placer.uniform(0.0, area.height)};
  }
  return nodes;
}

// Published reference rows the default sweep must land within 1.5% of.
struct ReferenceRow {
  int n;
  double y_min;
  double y_max;
  double k;
};

const ReferenceRow kReferenceRows[] = {
    {50, 0.002, 0.02, 0.018},       {100, 0.001, 0.01, 0.009},
    {150, 0.00067, 0.0067, 0.00603}, {200, 0.0005, 0.005, 0.0045},
    {250, 0.0004, 0.004, 0.0036},   {300, 0.00033, 0.0033, 0.00297},
};

void check_table_reproduction() {
  Clock::time_point start = Clock::now();
  fs::path out = work_dir() / "table2.csv";
  require(run_cli({"table2", "--out", out.string()}) == 0, "table2 subcommand failed");
  std::string text = slurp(out);
  double elapsed = seconds_since(start);

  std::istringstream lines(text);
  std::string line;
  require(std::getline(lines, line) && line == "N,ymin,ymax,k", "unexpected header: " + line);
  std::size_t row = 0;
  while (std::getline(lines, line)) {
    require(row < std::size(kReferenceRows), "more than six data rows");
    int n = 0;
    double y_min = 0.0, y_max = 0.0, k = 0.0;
    require(std::sscanf(line.c_str(), "%d,%lf,%lf,%lf", &n, &y_min, &y_max, &k) == 4,
            "unparseable row: " + line);
    const ReferenceRow& ref = kReferenceRows[row];
    require(n == ref.n, "row " + std::to_string(row) + " node count " + std::to_string(n));
    require(relative_gap(y_min, ref.y_min) <= 0.015, "y_min off at N=" + std::to_string(n));
    require(relative_gap(y_max, ref.y_max) <= 0.015, "y_max off at N=" + std::to_string(n));
    require(relative_gap(k, ref.k) <= 0.015, "k off at N=" + std::to_string(n));
    ++row;
  }
  require(row == std::size(kReferenceRows), "expected six data rows, got " + std::to_string(row));

  // The engine values behind the CSV are exactly v_min/N, v_max/N, spread/N.
  mobsim::SweepTable table = mobsim::run_speed_sweep(mobsim::parse_config(""));
  for (const mobsim::KFactorRow& r : table.rows) {
    require(relative_gap(r.y_min, 0.1 / r.node_count) < 1e-12, "engine y_min drifted");
    require(relative_gap(r.y_max, 1.0 / r.node_count) < 1e-12, "engine y_max drifted");
    require(relative_gap(r.k, 0.9 / r.node_count) < 1e-12, "engine k drifted");
  }
  require(elapsed < 1.0, "took " + std::to_string(elapsed) + " s, budget 1 s");
}

void check_shape_factors() {
  Clock::time_point start = Clock::now();
  mobsim::SweepTable table = mobsim::run_speed_sweep(mobsim::parse_config(""));
  mobsim::ExperimentReport report = mobsim::fit_report(table, mobsim::default_pdf_grid());
  double elapsed = seconds_since(start);
  require(std::abs(report.fit.alpha_mean - 0.735) < 1e-12,
          "alpha_mean = " + std::to_string(report.fit.alpha_mean));
  require(std::abs(report.fit.alpha_median - 0.5265) <= 0.003,
          "alpha_median = " + std::to_string(report.fit.alpha_median));
  require(elapsed < 1.0, "took " + std::to_string(elapsed) + " s, budget 1 s");

  fs::path out = work_dir() / "fit_report.txt";
  require(run_cli({"fit", "--out", out.string()}) == 0, "fit subcommand failed");
  require(slurp(out).find("0.735") != std::string::npos, "report does not state alpha_mean");
}

void check_decay_audit() {
  mobsim::SweepTable table = mobsim::run_speed_sweep(mobsim::parse_config(""));
  mobsim::ExperimentReport report = mobsim::fit_report(table, mobsim::default_pdf_grid());
  const mobsim::DecayFit& hyper = report.decay_hyperbolic;
  const mobsim::DecayFit& expo = report.decay_exponential;
  require(std::abs(hyper.scale - 0.9) <= 0.01, "c = " + std::to_string(hyper.scale));
  require(hyper.residual_norm < 1e-4,
          "hyperbolic residual " + std::to_string(hyper.residual_norm));
  require(hyper.residual_norm < expo.residual_norm,
          "exponential fit beat the hyperbolic one");
  std::string text = mobsim::render_report(report);
  require(text.find("better fit: hyperbolic") != std::string::npos,
          "report does not record the winning decay law");
}

void check_grid_monotonicity() {
  mobsim::SweepTable table = mobsim::run_speed_sweep(mobsim::parse_config(""));
  const mobsim::SpeedRatioGrid& grid = table.grid;
  require(!grid.node_counts.empty() && !grid.speeds.empty(), "empty grid");
  for (std::size_t i = 0; i < grid.node_counts.size(); ++i) {
    for (std::size_t j = 1; j < grid.speeds.size(); ++j) {
      require(grid.ratios[i][j] > grid.ratios[i][j - 1],
              "ratio not increasing in v at N=" + std::to_string(grid.node_counts[i]));
    }
  }
  for (std::size_t j = 0; j < grid.speeds.size(); ++j) {
    for (std::size_t i = 1; i < grid.node_counts.size(); ++i) {
      require(grid.ratios[i][j] < grid.ratios[i - 1][j],
              "ratio not decreasing in N at v=" + std::to_string(grid.speeds[j]));
    }
  }
}

void check_density_shape() {
  // Frozen high-precision value of 0.735^0.735.
  const double expected = 0.797482559816878254;
  require(std::abs(mobsim::pareto_pdf(0.0, 0.735) - expected) < 1e-9,
          "f(0, 0.735) = " + std::to_string(mobsim::pareto_pdf(0.0, 0.735)));

  mobsim::SweepTable table = mobsim::run_speed_sweep(mobsim::parse_config(""));
  mobsim::ExperimentReport report = mobsim::fit_report(table, mobsim::default_pdf_grid());
  std::vector<double> grid = mobsim::default_pdf_grid();
  require(grid.size() == 100, "expected a 100-point grid");
  for (double alpha : {report.fit.alpha_mean, report.fit.alpha_median}) {
    double previous = mobsim::pareto_pdf(grid.front(), alpha);
    for (std::size_t i = 1; i < grid.size(); ++i) {
      double value = mobsim::pareto_pdf(grid[i], alpha);
      require(value < previous, "density not strictly decreasing at alpha=" +
                                    std::to_string(alpha) + ", x=" + std::to_string(grid[i]));
      previous = value;
    }
  }
}

void check_mobility_properties() {
  Clock::time_point start = Clock::now();
  const long kSteps = 100000;
  mobsim::Area area;
  area.width = 100.0;
  area.height = 100.0;
  mobsim::SimulationClock clock;

  {  // Random walk: containment plus speeds inside the configured band.
    mobsim::ModelConfig model;
    model.kind = ModelKind::RandomWalk;
    std::vector<mobsim::NodeState> nodes = spread_nodes(5, area);
    mobsim::Rng rng(11);
    for (long t = 0; t < kSteps; ++t) {
      nodes = mobsim::step_network(nodes, model, area, clock, rng);
      for (const mobsim::NodeState& n : nodes) {
        require(area.contains(n.position), "walk node left the area");
        require(n.velocity.speed >= 0.1 && n.velocity.speed <= 1.0,
                "walk speed " + std::to_string(n.velocity.speed));
      }
    }
  }

  {  // Waypoint: containment plus strictly positive bounded travel speeds.
    mobsim::ModelConfig model;
    model.kind = ModelKind::RandomWaypoint;
    std::vector<mobsim::NodeState> nodes = spread_nodes(5, area);
    mobsim::Rng rng(12);
    for (long t = 0; t < kSteps; ++t) {
      nodes = mobsim::step_network(nodes, model, area, clock, rng);
      for (const mobsim::NodeState& n : nodes) {
        require(area.contains(n.position), "waypoint node left the area");
        if (n.phase == mobsim::Phase::Moving) {
          require(n.velocity.speed > 0.0 && n.velocity.speed <= 1.0,
                  "waypoint speed " + std::to_string(n.velocity.speed));
        }
      }
    }
  }

  {  // Matrix walk: one-step transition frequencies near the configured rows.
    mobsim::ModelConfig model;
    model.kind = ModelKind::ProbabilisticWalk;
    std::vector<mobsim::NodeState> nodes = spread_nodes(5, area);
    mobsim::Rng rng(13);
    long counts[3][3] = {};
    std::vector<AxisWalkState> previous(nodes.size());  // fresh nodes start at Current
    for (long t = 0; t < kSteps; ++t) {
      nodes = mobsim::step_network(nodes, model, area, clock, rng);
      for (std::size_t i = 0; i < nodes.size(); ++i) {
        require(area.contains(nodes[i].position), "matrix walk node left the area");
        AxisWalkState axes = std::get<AxisWalkState>(nodes[i].memory);
        ++counts[static_cast<int>(previous[i].x)][static_cast<int>(axes.x)];
        ++counts[static_cast<int>(previous[i].y)][static_cast<int>(axes.y)];
        previous[i] = axes;
      }
    }
    const auto& rows = mobsim::TransitionMatrix::forward_biased().rows();
    for (int from = 0; from < 3; ++from) {
      long total = counts[from][0] + counts[from][1] + counts[from][2];
      require(total > 0, "state " + std::to_string(from) + " never visited");
      for (int to = 0; to < 3; ++to) {
        double frequency = static_cast<double>(counts[from][to]) / static_cast<double>(total);
        require(std::abs(frequency - rows[from][to]) <= 0.01,
                "transition " + std::to_string(from) + "->" + std::to_string(to) +
                    " frequency " + std::to_string(frequency));
        if (rows[from][to] == 0.0) {
          require(counts[from][to] == 0, "forbidden transition occurred");
        }
      }
    }
  }

  {  // Pursue with zero noise: containment plus the exact update arithmetic.
    mobsim::ModelConfig model;
    model.kind = ModelKind::Pursue;
    model.params.pursue_noise_max = 0.0;
    const double gain = model.params.pursue_gain;
    std::vector<mobsim::NodeState> nodes = spread_nodes(5, area);
    mobsim::Rng rng(14);
    for (long t = 0; t < kSteps; ++t) {
      mobsim::Position target = nodes.front().position;
      std::vector<mobsim::NodeState> before = nodes;
      nodes = mobsim::step_network(nodes, model, area, clock, rng);
      for (const mobsim::NodeState& n : nodes) {
        require(area.contains(n.position), "pursue node left the area");
      }
      for (std::size_t i = 1; i < nodes.size(); ++i) {
        mobsim::Position expected =
            mobsim::pursue_update(before[i].position, target, gain, {0.0, 0.0});
        require(nodes[i].position.x == expected.x && nodes[i].position.y == expected.y,
                "pursuer deviated from the update formula");
        double gap_before = mobsim::distance(before[i].position, target);
        double gap_after = mobsim::distance(nodes[i].position, target);
        if (gap_before > 1e-9) {
          require(std::abs(gap_after / gap_before - (1.0 - gain)) < 1e-12,
                  "contraction factor " + std::to_string(gap_after / gap_before));
        }
      }
    }
  }

  double elapsed = seconds_since(start);
  require(elapsed < 30.0, "took " + std::to_string(elapsed) + " s, budget 30 s");
}

void check_statistics() {
  {  // Two-sample KS distances on known inputs.
    std::vector<double> a{1.0, 2.0, 3.0};
    std::vector<double> b{2.0, 3.0, 4.0};
    require(mobsim::ks_statistic(a, b) == 1.0 / 3.0, "shifted-sample distance is not 1/3");
    require(mobsim::ks_statistic(a, a) == 0.0, "identical samples should score 0");
    std::vector<double> c{10.0, 11.0, 12.0};
    require(mobsim::ks_statistic(a, c) == 1.0, "disjoint samples should score 1");
  }

  {  // Truncated Gaussian with the mean above the window: draws stay inside
     // and the histogram climbs toward the upper bound.
    mobsim::TruncatedGaussianSpec spec;
    mobsim::Rng rng(21);
    const int kDraws = 100000;
    const int kBins = 9;
    long bins[kBins] = {};
    double width = (spec.upper - spec.lower) / kBins;
    for (int i = 0; i < kDraws; ++i) {
      double x = mobsim::sample_truncated_gaussian(spec, rng);
      require(x >= spec.lower && x <= spec.upper, "draw " + std::to_string(x) + " out of bounds");
      int bin = static_cast<int>((x - spec.lower) / width);
      if (bin == kBins) bin = kBins - 1;
      ++bins[bin];
    }
    for (int i = 1; i < kBins; ++i) {
      require(bins[i] > bins[i - 1], "bin " + std::to_string(i) + " did not grow");
    }
  }

  {  // Exponential gaps: sample mean within 2% of 1/rate.
    mobsim::ArrivalRegime regime = mobsim::PoissonRegime{2.0};
    mobsim::Rng rng(22);
    const int kDraws = 100000;
    double sum = 0.0;
    for (int i = 0; i < kDraws; ++i) sum += mobsim::interarrival_sample(regime, rng);
    double mean = sum / kDraws;
    require(std::abs(mean - 0.5) <= 0.01, "sample mean " + std::to_string(mean));
  }
}

void check_determinism() {
  fs::path dir = work_dir();
  fs::path config_path = dir / "determinism.cfg";
  {
    std::ofstream cfg(config_path);
    cfg << "nodes = 5, 10, 15\nsteps = 40\nseed = 7\n";
  }
  const std::string cfg = config_path.string();

  fs::path first = dir / "first";
  fs::path second = dir / "second";
  fs::create_directories(first);
  fs::create_directories(second);
  auto in = [&](const fs::path& base, const char* name) { return (base / name).string(); };

  std::vector<std::pair<std::string, std::vector<std::string>>> invocations;
  invocations.emplace_back("simulate", std::vector<std::string>{"simulate", "--config", cfg});
  invocations.emplace_back("sweep", std::vector<std::string>{"sweep", "--config", cfg});
  invocations.emplace_back("table2", std::vector<std::string>{"table2", "--config", cfg});
  invocations.emplace_back("fit", std::vector<std::string>{"fit", "--config", cfg});

  for (const auto& [name, args] : invocations) {
    for (const fs::path& base : {first, second}) {
      std::vector<std::string> argv = args;
      argv.push_back("--out");
      argv.push_back(in(base, (name + ".out").c_str()));
      require(run_cli(argv) == 0, name + " failed");
    }
    require(slurp(first / (name + ".out")) == slurp(second / (name + ".out")),
            name + " output differs between runs");
  }
  // fit also writes a density table next to the report.
  require(slurp(first / "fit_pdf.csv") == slurp(second / "fit_pdf.csv"),
          "fit density table differs between runs");

  // metrics and export consume the simulated trace.
  const std::string trace = in(first, "simulate.out");
  for (const char* name : {"metrics", "export"}) {
    for (const fs::path& base : {first, second}) {
      std::vector<std::string> argv{name, trace, "--config", cfg,
                                    "--out", in(base, (std::string(name) + ".out").c_str())};
      if (std::string(name) == "export") {
        argv.push_back("--format");
        argv.push_back("ns2");
      }
      require(run_cli(argv) == 0, std::string(name) + " failed");
    }
    require(slurp(first / (std::string(name) + ".out")) ==
                slurp(second / (std::string(name) + ".out")),
            std::string(name) + " output differs between runs");
  }
}

struct Criterion {
  const char* name;
  std::function<void()> body;
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {"k-factor table reproduction", check_table_reproduction},
      {"pareto shape factors", check_shape_factors},
      {"decay law audit", check_decay_audit},
      {"speed ratio grid monotonicity", check_grid_monotonicity},
      {"pareto density shape", check_density_shape},
      {"mobility model property suite", check_mobility_properties},
      {"statistics suite", check_statistics},
      {"subcommand determinism", check_determinism},
  };
  int failures = 0;
  for (const Criterion& criterion : criteria) {
    try {
      criterion.body();
      std::printf("[PASS] %s\n", criterion.name);
    } catch (const std::exception& e) {
      ++failures;
      std::printf("[FAIL] %s: %s\n", criterion.name, e.what());
    }
    std::fflush(stdout);
  }
  return failures;
}
