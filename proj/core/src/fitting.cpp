#include "mobsim/fitting.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace mobsim {

double ks_statistic(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) {
    throw std::invalid_argument("ks_statistic: samples must be non-empty");
  }
  for (double x : a) {
    if (!std::isfinite(x)) throw std::invalid_argument("ks_statistic: sample contains non-finite value");
  }
  for (double x : b) {
    if (!std::isfinite(x)) throw std::invalid_argument("ks_statistic: sample contains non-finite value");
  }
  std::vector<double> sa(a.begin(), a.end());
  std::vector<double> sb(b.begin(), b.end());
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  const std::uint64_t n = sa.size();
  const std::uint64_t m = sb.size();
  std::uint64_t ia = 0;
  std::uint64_t ib = 0;
  std::uint64_t best = 0;  // numerator of D over the common denominator n*m
  while (ia < n || ib < m) {
    double v;
    if (ib == m || (ia < n && sa[ia] <= sb[ib])) {
      v = sa[ia];
    } else {
      v = sb[ib];
    }
    while (ia < n && sa[ia] == v) ++ia;
    while (ib < m && sb[ib] == v) ++ib;
    std::int64_t diff = static_cast<std::int64_t>(ia * m) - static_cast<std::int64_t>(ib * n);
    std::uint64_t mag = static_cast<std::uint64_t>(diff < 0 ? -diff : diff);
    best = std::max(best, mag);
  }
  return static_cast<double>(best) / (static_cast<double>(n) * static_cast<double>(m));
}

ParetoFit pareto_shape_from_k(std::span<const double> k_values, ShapeStatistic preferred,
                              double scaling) {
  if (k_values.empty()) {
    throw std::invalid_argument("pareto_shape_from_k: k list must not be empty");
  }
  if (!(std::isfinite(scaling) && scaling > 0.0)) {
    throw std::invalid_argument("pareto_shape_from_k: scaling must be positive");
  }
  double sum = 0.0;
  for (double k : k_values) {
    if (!std::isfinite(k)) {
      throw std::invalid_argument("pareto_shape_from_k: k values must be finite");
    }
    sum += k;
  }
  std::vector<double> sorted(k_values.begin(), k_values.end());
  std::sort(sorted.begin(), sorted.end());
  std::size_t mid = sorted.size() / 2;
  double median =
      sorted.size() % 2 == 1 ? sorted[mid] : 0.5 * (sorted[mid - 1] + sorted[mid]);
  ParetoFit fit;
  fit.alpha_mean = scaling * (sum / static_cast<double>(k_values.size()));
  fit.alpha_median = scaling * median;
  fit.scaling = scaling;
  fit.preferred = preferred;
  return fit;
}

double pareto_pdf(double x, double alpha) {
  if (!(std::isfinite(alpha) && alpha > 0.0)) {
    throw std::invalid_argument("pareto_pdf: alpha must be positive");
  }
  if (!(std::isfinite(x) && x >= 0.0)) {
    throw std::domain_error("pareto_pdf: x must be non-negative");
  }
  return std::pow(alpha / (1.0 + x), alpha);
}

DecayFit decay_fit(std::span<const std::pair<double, double>> points, DecayModel model) {
  if (points.size() < 3) {
    throw std::invalid_argument("decay_fit: need at least three points");
  }
  for (const auto& [n, k] : points) {
    if (!(std::isfinite(n) && n > 0.0) || !std::isfinite(k)) {
      throw std::invalid_argument("decay_fit: points must be finite with positive N");
    }
  }
  DecayFit fit;
  fit.model = model;
  if (model == DecayModel::Hyperbolic) {
    // Least squares in c for k = c/N: c = sum(k/N) / sum(1/N^2).
    double num = 0.0;
    double den = 0.0;
    for (const auto& [n, k] : points) {
      num += k / n;
      den += 1.0 / (n * n);
    }
    fit.scale = num / den;
  } else {
    for (const auto& [n, k] : points) {
      if (!(k > 0.0)) {
        throw std::invalid_argument("decay_fit: exponential model needs positive k values");
      }
    }
    // Ordinary linear regression of log k on N.
    double count = static_cast<double>(points.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (const auto& [n, k] : points) {
      double y = std::log(k);
      sx += n;
      sy += y;
      sxx += n * n;
      sxy += n * y;
    }
    double slope = (count * sxy - sx * sy) / (count * sxx - sx * sx);
    double intercept = (sy - slope * sx) / count;
    fit.rate = -slope;
    fit.scale = std::exp(intercept);
  }
  double ss = 0.0;
  for (const auto& [n, k] : points) {
    double predicted = model == DecayModel::Hyperbolic ? fit.scale / n
                                                       : fit.scale * std::exp(-fit.rate * n);
    double r = k - predicted;
    ss += r * r;
  }
  fit.residual_norm = std::sqrt(ss);
  return fit;
}

}  // namespace mobsim
