#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "rsig/model.hpp"
#include "rsig/scaling.hpp"

namespace rsig {

// A deviation sweep for one model at fixed (n, P, s, k).
struct ExperimentConfig {
  ModelKind model = ModelKind::kUniform;
  std::uint64_t n = 0;
  std::uint64_t P = 0;
  std::uint32_t s = 1;
  std::uint32_t k = 1;
  std::vector<double> grid;  // deviations, sorted ascending, non-empty
  std::uint32_t trials = 1;
  std::uint64_t master_seed = 0;
  double confidence = 0.95;
  std::uint32_t threads = 0;  // 0 -> hardware concurrency
  bool coupled = false;       // share permutation sources across grid points
  Rounding rounding = Rounding::kNearest;
  std::uint64_t pair_work_cap = kDefaultPairWorkCap;
};

struct Interval {
  double lo = 0.0;
  double hi = 1.0;
};

struct PropertyEstimate {
  std::uint64_t successes = 0;
  double hat = 0.0;
  Interval ci;
};

// Monte Carlo outcome of one grid point. Rows for infeasible points carry
// the error text instead of estimates; a sweep never aborts on them.
struct TrialTally {
  double deviation = 0.0;
  bool ok = false;
  std::string error;
  double solved_real = 0.0;
  double solved_param = 0.0;
  double edge_prob_exact = 0.0;
  double limit_prob = 0.0;
  std::uint32_t trials = 0;
  PropertyEstimate vconn;   // kappa_v >= k
  PropertyEstimate econn;   // kappa_e >= k
  PropertyEstimate mindeg;  // delta >= k
};

// Standard Wilson score interval; well-behaved at 0/1 success fractions.
Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double confidence);

// Throws ConstraintViolated unless trials >= 1, the grid is non-empty and
// ascending, and the confidence level sits in (0, 1).
void validate_config(const ExperimentConfig& config);

// Runs `config.trials` independently seeded samples at one deviation.
// Trial seeds are (master, point_index * 2^32 + trial); aggregation is pure
// count summation, so the result is independent of thread scheduling.
// Solver and sampler errors propagate.
TrialTally run_point(const ExperimentConfig& config, double deviation,
                     std::uint32_t point_index = 0);

// One tally per grid point. Per-point domain errors are recorded in-row and
// the sweep continues. In coupled mode all grid points of one trial share a
// single randomness source, making per-trial success indicators (and hence
// the counts) monotone in the deviation, exactly.
std::vector<TrialTally> sweep(const ExperimentConfig& config);

struct SandwichArm {
  std::string label;
  double param = 0.0;  // K (as a real) or t
  PropertyEstimate vconn, econn, mindeg;
};

// Empirical check of the uniform-sandwich around the binomial model.
struct SandwichReport {
  CouplingBounds bounds;
  std::uint64_t K_minus = 0;  // floor(k_minus) clamped into [s, P]
  std::uint64_t K_plus = 0;   // ceil(k_plus) clamped into [s, P]
  std::uint32_t trials = 0;
  std::array<SandwichArm, 3> arms;  // uniform@K-, binomial@t, uniform@K+
  bool ordered_vconn = false;  // ordering holds up to CI overlap
  bool ordered_econn = false;
  bool ordered_mindeg = false;
  bool ordered_all = false;
};

// Three independent estimates (uniform at K-, binomial at t, uniform at K+)
// of each property, plus whether freq(K-) <= freq(t) <= freq(K+) holds up
// to Wilson-interval overlap. Propagates NegativeLowerBound.
SandwichReport sandwich_check(std::uint64_t n, double t, std::uint64_t P, std::uint32_t s,
                              std::uint32_t k, std::uint32_t trials,
                              std::uint64_t master_seed, double confidence = 0.95,
                              std::uint32_t threads = 0);

}  // namespace rsig
