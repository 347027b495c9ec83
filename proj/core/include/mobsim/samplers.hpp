#pragma once

#include <variant>

#include "mobsim/rng.hpp"

namespace mobsim {

/// Pedestrian speed model: a normal clipped to [lower, upper] by rejection.
struct TruncatedGaussianSpec {
  double mean = 1.34;   // m/s
  double sigma = 0.5;   // m/s
  double lower = 0.1;   // m/s
  double upper = 1.0;   // m/s
};

/// Probability mass of [spec.lower, spec.upper] under the untruncated normal.
double acceptance_probability(const TruncatedGaussianSpec& spec);

/// Rejection-samples normal(mean, sigma) until the draw lands in
/// [lower, upper]. Throws std::invalid_argument on bad sigma/bounds and
/// std::domain_error when the window mass is below 1e-6 (the loop would
/// effectively never accept).
double sample_truncated_gaussian(const TruncatedGaussianSpec& spec, Rng& rng);

struct PoissonRegime {
  double rate = 1.0;  // arrivals per second
};

struct ParetoRegime {
  double shape = 1.5;
  double scale = 1.0;  // seconds
};

using ArrivalRegime = std::variant<PoissonRegime, ParetoRegime>;

/// Short hops are Poisson, long jumps heavy-tailed: returns the Poisson
/// regime when delta_x <= d and the Pareto regime otherwise (the tie goes to
/// Poisson). Throws std::invalid_argument unless d > 0 and delta_x >= 0.
ArrivalRegime select_arrival_regime(double delta_x, double d, const PoissonRegime& poisson,
                                    const ParetoRegime& pareto);

/// Strictly positive inter-arrival gap: exponential with mean 1/rate under
/// the Poisson regime, scale * U^(-1/shape) with U uniform on (0, 1] under
/// the Pareto regime. Throws std::invalid_argument on non-positive parameters.
double interarrival_sample(const ArrivalRegime& regime, Rng& rng);

}  // namespace mobsim
