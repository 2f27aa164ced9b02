#include "rsig/scaling.hpp"

#include <cmath>
#include <string>

#include "rsig/errors.hpp"
#include "rsig/probability.hpp"

namespace rsig {
namespace {

double factorial(std::uint32_t v) {
  double f = 1.0;
  for (std::uint32_t i = 2; i <= v; ++i) f *= i;
  return f;
}

void require_loglog(std::uint64_t n) {
  if (n < 3)
    throw DomainError("scaling formulas need n >= 3 (ln ln n must be positive), got n = " +
                      std::to_string(n));
}

// Advisory regime notes for finite-n experiments that wander outside the
// asymptotic conditions. Never fatal: probing those corners is deliberate.
void append_regime_warnings(ScalingPoint& pt) {
  if (pt.P < pt.n) {
    pt.warnings.push_back("P < n: outside the P = Omega(n) regime of the limit theorems");
  }
  if (pt.model == ModelKind::kBinomial && pt.s == 1 &&
      static_cast<double>(pt.P) < std::pow(static_cast<double>(pt.n), 1.1)) {
    pt.warnings.push_back(
        "s = 1 binomial model with P < n^1.1: the limit theorem needs P = Omega(n^c), c > 1");
  }
}

}  // namespace

double limit_probability(double deviation, std::uint32_t k) {
  if (k < 1) throw ConstraintViolated("limit_probability requires k >= 1");
  if (std::isinf(deviation)) return deviation > 0 ? 1.0 : 0.0;
  // exp(-deviation) overflows to +inf for very negative deviations and the
  // outer exp correctly carries that to 0.
  return std::exp(-std::exp(-deviation) / factorial(k - 1));
}

double scaling_numerator(std::uint64_t n, std::uint32_t k, double deviation) {
  require_loglog(n);
  const double ln_n = std::log(static_cast<double>(n));
  return ln_n + (static_cast<double>(k) - 1.0) * std::log(ln_n) + deviation;
}

ScalingPoint solve_K(std::uint64_t n, std::uint64_t P, std::uint32_t s, std::uint32_t k,
                     double alpha, Rounding rounding) {
  if (s < 1 || P < 1) throw ConstraintViolated("solve_K requires s >= 1 and P >= 1");
  validate_target(k);
  const double ell = scaling_numerator(n, k, alpha);
  if (!(ell > 0.0))
    throw DomainError("solve_K: ln n + (k-1) ln ln n + alpha must be positive, got " +
                      std::to_string(ell));

  // K* = (s! * P^s * ell / n)^(1/(2s)), evaluated in log space so P^s cannot
  // overflow for pool sizes up to 1e9 and s up to 16.
  const double log_K = (std::lgamma(static_cast<double>(s) + 1.0) +
                        static_cast<double>(s) * std::log(static_cast<double>(P)) +
                        std::log(ell) - std::log(static_cast<double>(n))) /
                       (2.0 * static_cast<double>(s));
  const double K_star = std::exp(log_K);

  double K_rounded = 0.0;
  switch (rounding) {
    case Rounding::kFloor: K_rounded = std::floor(K_star); break;
    case Rounding::kCeil: K_rounded = std::ceil(K_star); break;
    case Rounding::kNearest: K_rounded = std::round(K_star); break;
  }
  if (K_rounded < static_cast<double>(s) || K_rounded > static_cast<double>(P))
    throw Infeasible("solve_K: rounded K = " + std::to_string(K_rounded) +
                     " falls outside [s, P] = [" + std::to_string(s) + ", " +
                     std::to_string(P) + "]");

  ScalingPoint pt;
  pt.model = ModelKind::kUniform;
  pt.n = n;
  pt.P = P;
  pt.s = s;
  pt.k = k;
  pt.deviation = alpha;
  pt.solved_real = K_star;
  pt.solved_param = K_rounded;
  pt.limit_prob = limit_probability(alpha, k);
  const std::uint64_t K_int = static_cast<std::uint64_t>(K_rounded);
  pt.edge_prob_exact = uniform_edge_prob_exact(K_int, P, s);
  pt.edge_prob_asymptotic = uniform_edge_prob_asymptotic(K_int, P, s);
  append_regime_warnings(pt);
  return pt;
}

ScalingPoint solve_t(std::uint64_t n, std::uint64_t P, std::uint32_t s, std::uint32_t k,
                     double beta) {
  if (s < 1 || P < 1) throw ConstraintViolated("solve_t requires s >= 1 and P >= 1");
  validate_target(k);
  const double ell = scaling_numerator(n, k, beta);
  if (!(ell > 0.0))
    throw DomainError("solve_t: ln n + (k-1) ln ln n + beta must be positive, got " +
                      std::to_string(ell));

  // t* = (s! * ell / (n * P^s))^(1/(2s))
  const double log_t = (std::lgamma(static_cast<double>(s) + 1.0) + std::log(ell) -
                        std::log(static_cast<double>(n)) -
                        static_cast<double>(s) * std::log(static_cast<double>(P))) /
                       (2.0 * static_cast<double>(s));
  const double t_star = std::exp(log_t);
  if (t_star > 1.0)
    throw Infeasible("solve_t: solved t = " + std::to_string(t_star) +
                     " exceeds 1 (supercritical parameters)");

  ScalingPoint pt;
  pt.model = ModelKind::kBinomial;
  pt.n = n;
  pt.P = P;
  pt.s = s;
  pt.k = k;
  pt.deviation = beta;
  pt.solved_real = t_star;
  pt.solved_param = t_star;
  pt.limit_prob = limit_probability(beta, k);
  pt.edge_prob_exact = binomial_edge_prob_exact(t_star, P, s);
  pt.edge_prob_asymptotic = binomial_edge_prob_asymptotic(t_star, P, s);
  append_regime_warnings(pt);
  return pt;
}

double alpha_from_uniform(std::uint64_t n, double K, std::uint64_t P, std::uint32_t s,
                          std::uint32_t k) {
  require_loglog(n);
  const double lhs = uniform_edge_prob_asymptotic(K, P, s);
  const double ln_n = std::log(static_cast<double>(n));
  return static_cast<double>(n) * lhs - ln_n -
         (static_cast<double>(k) - 1.0) * std::log(ln_n);
}

double alpha_from_uniform(const UniformParams& params, std::uint32_t k) {
  return alpha_from_uniform(params.n, static_cast<double>(params.K), params.P, params.s, k);
}

double beta_from_binomial(std::uint64_t n, double t, std::uint64_t P, std::uint32_t s,
                          std::uint32_t k) {
  require_loglog(n);
  const double lhs = binomial_edge_prob_asymptotic(t, P, s);
  const double ln_n = std::log(static_cast<double>(n));
  return static_cast<double>(n) * lhs - ln_n -
         (static_cast<double>(k) - 1.0) * std::log(ln_n);
}

double beta_from_binomial(const BinomialParams& params, std::uint32_t k) {
  return beta_from_binomial(params.n, params.t, params.P, params.s, k);
}

double confine_deviation(double dev, std::uint64_t n, ConfineDirection direction) {
  require_loglog(n);
  const double bound = std::log(std::log(static_cast<double>(n)));
  return direction == ConfineDirection::kLower ? std::max(dev, -bound)
                                               : std::min(dev, bound);
}

CouplingBounds coupling_K_bounds(double t, std::uint64_t P, std::uint64_t n) {
  require_loglog(n);
  if (!(t >= 0.0) || !(t <= 1.0))
    throw ConstraintViolated("coupling_K_bounds requires 0 <= t <= 1");
  const double ln_n = std::log(static_cast<double>(n));
  const double tP = t * static_cast<double>(P);
  const double radius = std::sqrt(3.0 * ln_n * (ln_n + tP));

  CouplingBounds b;
  b.k_minus = tP - radius;
  b.k_plus = tP + radius;
  b.t = t;
  b.P = P;
  b.n = n;
  b.regime_warning = tP <= 3.0 * ln_n;
  if (!(b.k_minus > 0.0))
    throw NegativeLowerBound("coupling_K_bounds: t*P - sqrt(3 ln n (ln n + t*P)) = " +
                             std::to_string(b.k_minus) + " is not positive (t*P = " +
                             std::to_string(tP) + ", need t*P >> ln n)");
  return b;
}

}  // namespace rsig
