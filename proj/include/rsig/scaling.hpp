#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rsig/model.hpp"

namespace rsig {

enum class Rounding { kFloor, kCeil, kNearest };

// One solved point on the k-connectivity threshold curve. The deviation
// (alpha for the uniform model, beta for the binomial one) enters through
//
//   (1/s!) * K^{2s} / P^s = (ln n + (k-1) ln ln n + deviation) / n
//   (1/s!) * t^{2s} * P^s = (ln n + (k-1) ln ln n + deviation) / n
//
// and the limiting probability of all three monitored properties is
// exp(-exp(-deviation) / (k-1)!).
struct ScalingPoint {
  ModelKind model = ModelKind::kUniform;
  std::uint64_t n = 0;
  std::uint64_t P = 0;
  std::uint32_t s = 1;
  std::uint32_t k = 1;
  double deviation = 0.0;
  double solved_real = 0.0;        // unrounded K* or t*
  double solved_param = 0.0;       // rounded K (integral value) or t* itself
  double limit_prob = 0.0;         // exp(-exp(-deviation)/(k-1)!)
  double edge_prob_exact = 0.0;    // at the rounded parameter
  double edge_prob_asymptotic = 0.0;
  std::vector<std::string> warnings;  // advisory regime notes, never fatal
};

enum class ConfineDirection { kLower, kUpper };

// The K-interval within which the binomial model at (t, P) is sandwiched by
// uniform models: k_minus/k_plus = t*P -/+ sqrt(3 ln n (ln n + t*P)).
struct CouplingBounds {
  double k_minus = 0.0;
  double k_plus = 0.0;
  double t = 0.0;
  std::uint64_t P = 0;
  std::uint64_t n = 0;
  bool regime_warning = false;  // set when t*P <= 3 ln n
};

// exp(-exp(-deviation)/(k-1)!); -inf -> 0, +inf -> 1.
double limit_probability(double deviation, std::uint32_t k);

// ln n + (k-1) ln ln n + deviation. Requires n >= 3.
double scaling_numerator(std::uint64_t n, std::uint32_t k, double deviation);

// Solves the uniform threshold equation for K at a given deviation and
// rounds per `rounding` (floor/ceil mirror the one-sided subgraph and
// supergraph constructions; nearest distorts the deviation least).
ScalingPoint solve_K(std::uint64_t n, std::uint64_t P, std::uint32_t s, std::uint32_t k,
                     double alpha, Rounding rounding = Rounding::kNearest);

// Solves the binomial threshold equation for t (no rounding, t is real).
ScalingPoint solve_t(std::uint64_t n, std::uint64_t P, std::uint32_t s, std::uint32_t k,
                     double beta);

// Deviation realized by concrete parameters (inverse of the solvers on
// unrounded values). K may be non-integral.
double alpha_from_uniform(std::uint64_t n, double K, std::uint64_t P, std::uint32_t s,
                          std::uint32_t k);
double alpha_from_uniform(const UniformParams& params, std::uint32_t k);
double beta_from_binomial(std::uint64_t n, double t, std::uint64_t P, std::uint32_t s,
                          std::uint32_t k);
double beta_from_binomial(const BinomialParams& params, std::uint32_t k);

// Confinement transform: lower -> max(dev, -ln ln n), upper -> min(dev, ln ln n).
double confine_deviation(double dev, std::uint64_t n, ConfineDirection direction);

// Coupling interval around t*P. Throws NegativeLowerBound when k_minus <= 0.
CouplingBounds coupling_K_bounds(double t, std::uint64_t P, std::uint64_t n);

}  // namespace rsig
