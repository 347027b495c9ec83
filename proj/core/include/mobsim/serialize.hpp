#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mobsim/sweep.hpp"

namespace mobsim {

/// Table numbers carry six significant digits.
std::string format_table_number(double value);

/// Header "N,ymin,ymax,k", one data line per row.
std::string emit_table2_csv(std::span<const KFactorRow> rows);

/// Long-form grid under "N,v,ratio", ordered by (N, v).
std::string emit_sweep_csv(const SweepTable& table);

/// Header "x,f_alpha_mean,f_alpha_median".
std::string emit_pdf_csv(const PdfCurves& curves);

/// Generic metric rows under "metric,value".
std::string emit_metrics_csv(std::span<const std::pair<std::string, double>> rows);

/// Human-readable fit summary: both alphas (preferred one flagged), the ratio
/// definition, both decay fits with residuals, and which law fits better.
std::string render_report(const ExperimentReport& report);

}  // namespace mobsim
