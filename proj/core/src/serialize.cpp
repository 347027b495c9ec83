#include "mobsim/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace mobsim {

namespace {

void require_finite(double value, const char* what) {
  if (!std::isfinite(value)) {
    throw std::invalid_argument(std::string("serialize: ") + what + " is not finite");
  }
}

}  // namespace

std::string format_table_number(double value) {
  require_finite(value, "table value");
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.6g", value);
  return buffer;
}

std::string emit_table2_csv(std::span<const KFactorRow> rows) {
  std::string out = "N,ymin,ymax,k\n";
  for (const auto& row : rows) {
    out += std::to_string(row.node_count);
    out += ',';
    out += format_table_number(row.y_min);
    out += ',';
    out += format_table_number(row.y_max);
    out += ',';
    out += format_table_number(row.k);
    out += '\n';
  }
  return out;
}

std::string emit_sweep_csv(const SweepTable& table) {
  const SpeedRatioGrid& grid = table.grid;
  std::string out = "N,v,ratio\n";
  for (std::size_t i = 0; i < grid.node_counts.size(); ++i) {
    for (std::size_t j = 0; j < grid.speeds.size(); ++j) {
      out += std::to_string(grid.node_counts[i]);
      out += ',';
      out += format_table_number(grid.speeds[j]);
      out += ',';
      out += format_table_number(grid.ratios[i][j]);
      out += '\n';
    }
  }
  return out;
}

std::string emit_pdf_csv(const PdfCurves& curves) {
  if (curves.x.size() != curves.f_alpha_mean.size() ||
      curves.x.size() != curves.f_alpha_median.size()) {
    throw std::invalid_argument("serialize: pdf columns have mismatched lengths");
  }
  std::string out = "x,f_alpha_mean,f_alpha_median\n";
  for (std::size_t i = 0; i < curves.x.size(); ++i) {
    out += format_table_number(curves.x[i]);
    out += ',';
    out += format_table_number(curves.f_alpha_mean[i]);
    out += ',';
    out += format_table_number(curves.f_alpha_median[i]);
    out += '\n';
  }
  return out;
}

std::string emit_metrics_csv(std::span<const std::pair<std::string, double>> rows) {
  std::string out = "metric,value\n";
  for (const auto& [name, value] : rows) {
    if (name.find(',') != std::string::npos || name.find('\n') != std::string::npos) {
      throw std::invalid_argument("serialize: metric name contains a delimiter: " + name);
    }
    out += name;
    out += ',';
    out += format_table_number(value);
    out += '\n';
  }
  return out;
}

std::string render_report(const ExperimentReport& report) {
  std::string out;
  out += "speed ratio study\n";
  out += "=================\n";
  out += "ratio(v, N) = v / N\n\n";

  out += "spread of the ratio by network size\n";
  out += "N      ymin        ymax        k\n";
  for (const auto& row : report.sweep.rows) {
    char line[96];
    std::snprintf(line, sizeof(line), "%-6d %-11s %-11s %s\n", row.node_count,
                  format_table_number(row.y_min).c_str(),
                  format_table_number(row.y_max).c_str(), format_table_number(row.k).c_str());
    out += line;
  }
  out += '\n';

  out += "pareto shape fitted to the scaled k column\n";
  out += "alpha (mean of scaled k):   " + format_table_number(report.fit.alpha_mean) + '\n';
  out += "alpha (median of scaled k): " + format_table_number(report.fit.alpha_median) +
         "  <- preferred\n";
  out += "scaling: " + format_table_number(report.fit.scaling) + '\n';
  out += '\n';

  out += "decay of k with network size\n";
  const DecayFit& hyp = report.decay_hyperbolic;
  const DecayFit& exp = report.decay_exponential;
  out += "hyperbolic  k = c / N:          c = " + format_table_number(hyp.scale) +
         ", residual = " + format_table_number(hyp.residual_norm) + '\n';
  out += "exponential k = a * exp(-b*N):  a = " + format_table_number(exp.scale) +
         ", b = " + format_table_number(exp.rate) +
         ", residual = " + format_table_number(exp.residual_norm) + '\n';
  out += "better fit: ";
  out += (hyp.residual_norm <= exp.residual_norm ? "hyperbolic" : "exponential");
  out += '\n';
  return out;
}

}  // namespace mobsim
