#pragma once

#include <span>
#include <utility>

namespace mobsim {

/// Two-sample Kolmogorov-Smirnov distance in [0, 1], computed with integer
/// step counts over the merged samples so equal-weight ties cancel exactly.
/// Throws std::invalid_argument on empty or non-finite samples.
double ks_statistic(std::span<const double> a, std::span<const double> b);

enum class ShapeStatistic { Mean, Median };

/// Single-parameter Pareto shape recovered from a k-factor column. Both
/// estimates are kept; `preferred` records which one the caller selected and
/// alpha() returns it.
struct ParetoFit {
  double alpha_mean = 0.0;
  double alpha_median = 0.0;
  double scaling = 0.0;
  ShapeStatistic preferred = ShapeStatistic::Median;

  double alpha() const { return preferred == ShapeStatistic::Mean ? alpha_mean : alpha_median; }
};

/// alpha = scaling * (mean and median of k_values); the median of an
/// even-length list is the midpoint of the two central values.
/// Throws std::invalid_argument on an empty list or non-positive scaling.
ParetoFit pareto_shape_from_k(std::span<const double> k_values, ShapeStatistic preferred,
                              double scaling = 100.0);

/// Density f(x) = (alpha / (1 + x))^alpha, evaluated literally. Not a
/// normalised density for general alpha; no normalisation is asserted.
/// Throws std::invalid_argument on alpha <= 0, std::domain_error on x < 0.
double pareto_pdf(double x, double alpha);

enum class DecayModel { Hyperbolic, Exponential };

/// Least-squares decay law for k against N. Hyperbolic fits k = c / N
/// directly; Exponential fits log k = log a - b * N in log space.
/// residual_norm is the Euclidean data-minus-fit distance in k space for both
/// models, so the two numbers are directly comparable.
struct DecayFit {
  DecayModel model = DecayModel::Hyperbolic;
  double scale = 0.0;          // c for Hyperbolic, a for Exponential
  double rate = 0.0;           // b for Exponential, unused for Hyperbolic
  double residual_norm = 0.0;
};

/// Points are (N, k) pairs; at least three are required. The Exponential
/// model rejects non-positive k (log undefined).
DecayFit decay_fit(std::span<const std::pair<double, double>> points, DecayModel model);

}  // namespace mobsim
