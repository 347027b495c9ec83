#include <benchmark/benchmark.h>

#include <utility>
#include <vector>

#include "mobsim/config.hpp"
#include "mobsim/fitting.hpp"
#include "mobsim/metrics.hpp"
#include "mobsim/mobility.hpp"
#include "mobsim/neighbor_graph.hpp"
#include "mobsim/rng.hpp"
#include "mobsim/samplers.hpp"
#include "mobsim/scenario.hpp"
#include "mobsim/sweep.hpp"

namespace {

std::vector<mobsim::NodeState> uniform_nodes(int count, const mobsim::Area& area,
                                             std::uint64_t seed) {
  std::vector<mobsim::NodeState> nodes(count);
  mobsim::Rng placer(seed);
  for (int i = 0; i < count; ++i) {
    nodes[i].id = i;
    nodes[i].position = {placer.uniform(0.0, area.width), placer.uniform(0.0, area.height)};
  }
  return nodes;
}

void BM_StepNetwork(benchmark::State& state, mobsim::ModelKind kind) {
  mobsim::Area area;
  mobsim::SimulationClock clock;
  mobsim::ModelConfig model;
  model.kind = kind;
  int count = static_cast<int>(state.range(0));
  std::vector<mobsim::NodeState> nodes = uniform_nodes(count, area, 1);
  mobsim::Rng rng(2);
  for (auto _ : state) {
    nodes = mobsim::step_network(nodes, model, area, clock, rng);
    benchmark::DoNotOptimize(nodes.data());
  }
  state.SetItemsProcessed(state.iterations() * count);
}

void BM_NeighborClustering(benchmark::State& state) {
  mobsim::Area area;
  std::vector<mobsim::NodeState> nodes = uniform_nodes(static_cast<int>(state.range(0)), area, 3);
  std::vector<std::pair<int, mobsim::Position>> placements;
  placements.reserve(nodes.size());
  for (const mobsim::NodeState& n : nodes) placements.emplace_back(n.id, n.position);
  for (auto _ : state) {
    mobsim::NeighborGraph graph(placements, 250.0);
    double total = 0.0;
    for (int id : graph.ids()) total += mobsim::clustering_coefficient(graph, id);
    benchmark::DoNotOptimize(total);
  }
}

void BM_KsStatistic(benchmark::State& state) {
  mobsim::Rng rng(4);
  std::vector<double> a(state.range(0)), b(state.range(0));
  for (double& x : a) x = rng.uniform(0.0, 1.0);
  for (double& x : b) x = rng.uniform(0.1, 1.1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mobsim::ks_statistic(a, b));
  }
}

void BM_TruncatedGaussian(benchmark::State& state) {
  mobsim::TruncatedGaussianSpec spec;
  mobsim::Rng rng(5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mobsim::sample_truncated_gaussian(spec, rng));
  }
}

void BM_SweepAndFit(benchmark::State& state) {
  mobsim::ScenarioConfig config = mobsim::parse_config("");
  std::vector<double> grid = mobsim::default_pdf_grid();
  for (auto _ : state) {
    mobsim::SweepTable table = mobsim::run_speed_sweep(config);
    mobsim::ExperimentReport report = mobsim::fit_report(table, grid);
    benchmark::DoNotOptimize(report.fit.alpha_mean);
  }
}

}  // namespace

BENCHMARK_CAPTURE(BM_StepNetwork, random_walk, mobsim::ModelKind::RandomWalk)->Arg(50)->Arg(200);
BENCHMARK_CAPTURE(BM_StepNetwork, random_waypoint, mobsim::ModelKind::RandomWaypoint)
    ->Arg(50)
    ->Arg(200);
BENCHMARK_CAPTURE(BM_StepNetwork, probabilistic_walk, mobsim::ModelKind::ProbabilisticWalk)
    ->Arg(50)
    ->Arg(200);
BENCHMARK_CAPTURE(BM_StepNetwork, pursue, mobsim::ModelKind::Pursue)->Arg(50)->Arg(200);
BENCHMARK(BM_NeighborClustering)->Arg(100)->Arg(300);
BENCHMARK(BM_KsStatistic)->Arg(1000);
BENCHMARK(BM_TruncatedGaussian);
BENCHMARK(BM_SweepAndFit);

BENCHMARK_MAIN();
