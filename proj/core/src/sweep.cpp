#include "mobsim/sweep.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace mobsim {

SweepTable run_speed_sweep(const ScenarioConfig& config) {
  validate(config);
  SweepTable table;
  table.grid.node_counts = config.node_counts;
  table.grid.speeds = config.speeds;
  table.grid.ratios.reserve(config.node_counts.size());
  for (int n : config.node_counts) {
    std::vector<double> row;
    row.reserve(config.speeds.size());
    for (double v : config.speeds) row.push_back(speed_ratio(v, n));
    table.grid.ratios.push_back(std::move(row));
  }
  table.rows = compute_table2(table);
  return table;
}

std::vector<KFactorRow> compute_table2(const SweepTable& sweep) {
  const SpeedRatioGrid& grid = sweep.grid;
  if (grid.node_counts.empty() || grid.ratios.size() != grid.node_counts.size()) {
    throw std::invalid_argument("compute_table2: sweep grid is empty or ragged");
  }
  std::vector<KFactorRow> rows;
  rows.reserve(grid.node_counts.size());
  for (std::size_t i = 0; i < grid.node_counts.size(); ++i) {
    const std::vector<double>& ratios = grid.ratios[i];
    if (ratios.empty()) {
      throw std::invalid_argument("compute_table2: sweep grid is empty or ragged");
    }
    KFactorRow row;
    row.node_count = grid.node_counts[i];
    row.y_min = *std::min_element(ratios.begin(), ratios.end());
    row.y_max = *std::max_element(ratios.begin(), ratios.end());
    row.k = k_factor(ratios);
    rows.push_back(row);
  }
  return rows;
}

std::vector<double> default_pdf_grid() {
  std::vector<double> grid;
  grid.reserve(100);
  for (int i = 0; i < 100; ++i) grid.push_back(i / 10.0);
  return grid;
}

ExperimentReport fit_report(const SweepTable& sweep, std::span<const double> x_grid,
                            double scaling) {
  if (x_grid.empty()) {
    throw std::invalid_argument("fit_report: x grid must not be empty");
  }
  std::vector<double> k_column;
  std::vector<std::pair<double, double>> points;
  k_column.reserve(sweep.rows.size());
  points.reserve(sweep.rows.size());
  for (const KFactorRow& row : sweep.rows) {
    k_column.push_back(row.k);
    points.emplace_back(static_cast<double>(row.node_count), row.k);
  }
  ExperimentReport report;
  report.sweep = sweep;
  report.fit = pareto_shape_from_k(k_column, ShapeStatistic::Median, scaling);
  report.decay_hyperbolic = decay_fit(points, DecayModel::Hyperbolic);
  report.decay_exponential = decay_fit(points, DecayModel::Exponential);
  report.pdf_curves.x.assign(x_grid.begin(), x_grid.end());
  report.pdf_curves.f_alpha_mean.reserve(x_grid.size());
  report.pdf_curves.f_alpha_median.reserve(x_grid.size());
  for (double x : x_grid) {
    report.pdf_curves.f_alpha_mean.push_back(pareto_pdf(x, report.fit.alpha_mean));
    report.pdf_curves.f_alpha_median.push_back(pareto_pdf(x, report.fit.alpha_median));
  }
  return report;
}

}  // namespace mobsim
