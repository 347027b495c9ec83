#pragma once

#include <span>
#include <vector>

#include "mobsim/fitting.hpp"
#include "mobsim/metrics.hpp"
#include "mobsim/scenario.hpp"

namespace mobsim {

struct SweepTable {
  SpeedRatioGrid grid;
  std::vector<KFactorRow> rows;  // one per node count, ascending
};

/// Evaluates the analytic speed ratio over the configured (N, v) grid and
/// summarises each node-count row as (y_min, y_max, k).
SweepTable run_speed_sweep(const ScenarioConfig& config);

/// Reduces a sweep grid to its per-node-count summary rows. Recomputed from
/// the grid, so it also cross-checks the rows run_speed_sweep stored.
std::vector<KFactorRow> compute_table2(const SweepTable& sweep);

/// Pareto densities for both shape estimates on a shared x grid.
struct PdfCurves {
  std::vector<double> x;
  std::vector<double> f_alpha_mean;
  std::vector<double> f_alpha_median;
};

/// Everything the fit workflow derives from one sweep: shape estimates (the
/// median one flagged as preferred), both decay-law fits of the k column, and
/// plottable density curves.
struct ExperimentReport {
  SweepTable sweep;
  ParetoFit fit;
  DecayFit decay_hyperbolic;
  DecayFit decay_exponential;
  PdfCurves pdf_curves;
};

/// x = 0.0, 0.1, ..., 9.9 (100 points).
std::vector<double> default_pdf_grid();

ExperimentReport fit_report(const SweepTable& sweep, std::span<const double> x_grid,
                            double scaling = 100.0);

}  // namespace mobsim
