#include "rsig/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <thread>

#include <boost/math/distributions/normal.hpp>

#include "rsig/connectivity.hpp"
#include "rsig/errors.hpp"
#include "rsig/sampler.hpp"

namespace rsig {
namespace {

// Per-point success counters; merging is commutative integer addition.
struct Counts {
  std::uint64_t vconn = 0;
  std::uint64_t econn = 0;
  std::uint64_t mindeg = 0;

  void absorb(const KConnectivityFlags& f) {
    vconn += f.vconn;
    econn += f.econn;
    mindeg += f.mindeg;
  }
  Counts& operator+=(const Counts& o) {
    vconn += o.vconn;
    econn += o.econn;
    mindeg += o.mindeg;
    return *this;
  }
};

std::uint32_t effective_threads(std::uint32_t requested, std::uint32_t jobs) {
  std::uint32_t t = requested == 0 ? std::thread::hardware_concurrency() : requested;
  if (t == 0) t = 1;
  return std::max(1u, std::min(t, jobs));
}

// Static contiguous partition of [0, jobs); worker exceptions are rethrown
// on the caller thread. Results must be merged commutatively by the caller.
template <typename Body>
void parallel_chunks(std::uint32_t jobs, std::uint32_t threads, Body body) {
  const std::uint32_t workers = effective_threads(threads, jobs);
  if (workers <= 1) {
    body(0, 0, jobs);
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::uint32_t chunk = (jobs + workers - 1) / workers;
  for (std::uint32_t w = 0; w < workers; ++w) {
    const std::uint32_t begin = w * chunk;
    const std::uint32_t end = std::min(jobs, begin + chunk);
    pool.emplace_back([&, w, begin, end] {
      try {
        if (begin < end) body(w, begin, end);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

// Stream id of one trial of one grid point (or sandwich arm). Published so
// any single trial can be reproduced in isolation.
std::uint64_t trial_stream(std::uint32_t point_index, std::uint32_t trial) {
  return (static_cast<std::uint64_t>(point_index) << 32) | trial;
}

PropertyEstimate make_estimate(std::uint64_t successes, std::uint32_t trials,
                               double confidence) {
  PropertyEstimate e;
  e.successes = successes;
  e.hat = trials ? static_cast<double>(successes) / trials : 0.0;
  e.ci = wilson_interval(successes, trials, confidence);
  return e;
}

TrialTally tally_from_counts(const ScalingPoint& pt, const Counts& counts,
                             const ExperimentConfig& config, double deviation) {
  TrialTally t;
  t.deviation = deviation;
  t.ok = true;
  t.solved_real = pt.solved_real;
  t.solved_param = pt.solved_param;
  t.edge_prob_exact = pt.edge_prob_exact;
  t.limit_prob = pt.limit_prob;
  t.trials = config.trials;
  t.vconn = make_estimate(counts.vconn, config.trials, config.confidence);
  t.econn = make_estimate(counts.econn, config.trials, config.confidence);
  t.mindeg = make_estimate(counts.mindeg, config.trials, config.confidence);
  return t;
}

TrialTally error_tally(double deviation, const std::string& message) {
  TrialTally t;
  t.deviation = deviation;
  t.ok = false;
  t.error = message;
  return t;
}

ScalingPoint solve_point(const ExperimentConfig& config, double deviation) {
  return config.model == ModelKind::kUniform
             ? solve_K(config.n, config.P, config.s, config.k, deviation, config.rounding)
             : solve_t(config.n, config.P, config.s, config.k, deviation);
}

Counts run_trials_at(const ExperimentConfig& config, const ScalingPoint& pt,
                     std::uint32_t point_index) {
  const PropertyTarget target = validate_target(config.k);
  const SamplerOptions opts{config.pair_work_cap};
  const std::uint32_t workers = effective_threads(config.threads, config.trials);
  std::vector<Counts> partial(workers);

  if (config.model == ModelKind::kUniform) {
    const UniformParams params = validate_uniform(
        config.n, static_cast<std::uint64_t>(pt.solved_param), config.P, config.s);
    parallel_chunks(config.trials, workers,
                    [&](std::uint32_t w, std::uint32_t begin, std::uint32_t end) {
                      for (std::uint32_t i = begin; i < end; ++i) {
                        const Seed seed{config.master_seed, trial_stream(point_index, i)};
                        const ItemGraph g = sample_uniform(params, seed, opts);
                        partial[w].absorb(is_k_connected(g, target));
                      }
                    });
  } else {
    const BinomialParams params =
        validate_binomial(config.n, pt.solved_param, config.P, config.s);
    parallel_chunks(config.trials, workers,
                    [&](std::uint32_t w, std::uint32_t begin, std::uint32_t end) {
                      for (std::uint32_t i = begin; i < end; ++i) {
                        const Seed seed{config.master_seed, trial_stream(point_index, i)};
                        const ItemGraph g = sample_binomial(params, seed, opts);
                        partial[w].absorb(is_k_connected(g, target));
                      }
                    });
  }
  Counts total;
  for (const Counts& c : partial) total += c;
  return total;
}

// Coupled sweep over the feasible grid points: one randomness source per
// trial, one graph per point sliced from it.
std::vector<Counts> run_trials_coupled(const ExperimentConfig& config,
                                       const std::vector<ScalingPoint>& points) {
  const PropertyTarget target = validate_target(config.k);
  const SamplerOptions opts{config.pair_work_cap};
  const std::uint32_t workers = effective_threads(config.threads, config.trials);
  const std::size_t m = points.size();
  std::vector<std::vector<Counts>> partial(workers, std::vector<Counts>(m));

  std::vector<std::uint64_t> Ks;
  std::vector<double> ts;
  if (config.model == ModelKind::kUniform) {
    for (const auto& pt : points) Ks.push_back(static_cast<std::uint64_t>(pt.solved_param));
  } else {
    for (const auto& pt : points) ts.push_back(pt.solved_param);
  }

  parallel_chunks(config.trials, workers,
                  [&](std::uint32_t w, std::uint32_t begin, std::uint32_t end) {
                    for (std::uint32_t i = begin; i < end; ++i) {
                      const Seed seed{config.master_seed, trial_stream(0, i)};
                      const std::vector<ItemGraph> graphs =
                          config.model == ModelKind::kUniform
                              ? sample_uniform_family(config.n, config.P, config.s, Ks,
                                                      seed, opts)
                              : sample_binomial_family(config.n, config.P, config.s, ts,
                                                       seed, opts);
                      for (std::size_t p = 0; p < m; ++p) {
                        partial[w][p].absorb(is_k_connected(graphs[p], target));
                      }
                    }
                  });

  std::vector<Counts> totals(m);
  for (const auto& per_worker : partial)
    for (std::size_t p = 0; p < m; ++p) totals[p] += per_worker[p];
  return totals;
}

}  // namespace

Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double confidence) {
  if (trials < 1 || successes > trials)
    throw ConstraintViolated("wilson_interval requires 0 <= successes <= trials, trials >= 1");
  if (!(confidence > 0.0) || !(confidence < 1.0))
    throw ConstraintViolated("wilson_interval requires confidence in (0, 1)");
  static const boost::math::normal_distribution<double> unit_normal(0.0, 1.0);
  const double z = boost::math::quantile(unit_normal, 0.5 + confidence / 2.0);
  const double nn = static_cast<double>(trials);
  const double p_hat = static_cast<double>(successes) / nn;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / nn;
  const double center = (p_hat + z2 / (2.0 * nn)) / denom;
  const double half =
      (z / denom) * std::sqrt(p_hat * (1.0 - p_hat) / nn + z2 / (4.0 * nn * nn));
  Interval iv;
  iv.lo = std::max(0.0, center - half);
  iv.hi = std::min(1.0, center + half);
  return iv;
}

void validate_config(const ExperimentConfig& config) {
  if (config.trials < 1) throw ConstraintViolated("experiment config: trials >= 1 violated");
  if (config.grid.empty()) throw ConstraintViolated("experiment config: grid must be non-empty");
  if (!std::is_sorted(config.grid.begin(), config.grid.end()))
    throw ConstraintViolated("experiment config: grid must be sorted ascending");
  if (!(config.confidence > 0.0) || !(config.confidence < 1.0))
    throw ConstraintViolated("experiment config: confidence must lie in (0, 1)");
  validate_target(config.k);
}

TrialTally run_point(const ExperimentConfig& config, double deviation,
                     std::uint32_t point_index) {
  const ScalingPoint pt = solve_point(config, deviation);
  const Counts counts = run_trials_at(config, pt, point_index);
  return tally_from_counts(pt, counts, config, deviation);
}

std::vector<TrialTally> sweep(const ExperimentConfig& config) {
  validate_config(config);
  std::vector<TrialTally> rows;
  rows.reserve(config.grid.size());

  if (!config.coupled) {
    for (std::uint32_t p = 0; p < config.grid.size(); ++p) {
      try {
        rows.push_back(run_point(config, config.grid[p], p));
      } catch (const Error& e) {
        rows.push_back(error_tally(config.grid[p], e.what()));
      }
    }
    return rows;
  }

  // Coupled mode: solve everything first, keep the feasible subsequence.
  std::vector<ScalingPoint> points;
  std::vector<std::size_t> ok_index;
  rows.resize(config.grid.size());
  for (std::size_t p = 0; p < config.grid.size(); ++p) {
    try {
      points.push_back(solve_point(config, config.grid[p]));
      ok_index.push_back(p);
    } catch (const Error& e) {
      rows[p] = error_tally(config.grid[p], e.what());
    }
  }
  if (!points.empty()) {
    try {
      const std::vector<Counts> counts = run_trials_coupled(config, points);
      for (std::size_t i = 0; i < points.size(); ++i) {
        rows[ok_index[i]] =
            tally_from_counts(points[i], counts[i], config, config.grid[ok_index[i]]);
      }
    } catch (const Error& e) {
      for (std::size_t i = 0; i < points.size(); ++i)
        rows[ok_index[i]] = error_tally(config.grid[ok_index[i]], e.what());
    }
  }
  return rows;
}

SandwichReport sandwich_check(std::uint64_t n, double t, std::uint64_t P, std::uint32_t s,
                              std::uint32_t k, std::uint32_t trials,
                              std::uint64_t master_seed, double confidence,
                              std::uint32_t threads) {
  if (trials < 1) throw ConstraintViolated("sandwich_check requires trials >= 1");
  validate_binomial(n, t, P, s);

  SandwichReport rep;
  rep.bounds = coupling_K_bounds(t, P, n);
  rep.trials = trials;
  const auto clamp_K = [&](double x) {
    const double r = std::clamp(x, static_cast<double>(s), static_cast<double>(P));
    return static_cast<std::uint64_t>(r);
  };
  rep.K_minus = clamp_K(std::floor(rep.bounds.k_minus));
  rep.K_plus = clamp_K(std::ceil(rep.bounds.k_plus));

  ExperimentConfig base;
  base.n = n;
  base.P = P;
  base.s = s;
  base.k = k;
  base.trials = trials;
  base.master_seed = master_seed;
  base.confidence = confidence;
  base.threads = threads;

  const struct {
    ModelKind model;
    double param;
    const char* label;
  } arms[3] = {{ModelKind::kUniform, static_cast<double>(rep.K_minus), "uniform_K_minus"},
               {ModelKind::kBinomial, t, "binomial"},
               {ModelKind::kUniform, static_cast<double>(rep.K_plus), "uniform_K_plus"}};

  for (std::uint32_t a = 0; a < 3; ++a) {
    ExperimentConfig cfg = base;
    cfg.model = arms[a].model;
    ScalingPoint pt;  // only the sampled parameter matters here
    pt.solved_param = arms[a].param;
    const Counts counts = run_trials_at(cfg, pt, a);
    rep.arms[a].label = arms[a].label;
    rep.arms[a].param = arms[a].param;
    rep.arms[a].vconn = make_estimate(counts.vconn, trials, confidence);
    rep.arms[a].econn = make_estimate(counts.econn, trialsls, confidence);
    rep.arms[a].mindeg = make_estimate(counts.mindeg, trials, confidence);
  }

  // "A <= B up to CI overlap": violated only when A's interval sits entirely
  // above B's. The coupling bound carries an o(1) slack, so strict ordering
  // of point estimates is not required.
  const auto ordered = [](const PropertyEstimate& a, const PropertyEstimate& b) {
    return a.hat <= b.hat || a.ci.lo <= b.ci.hi;
  };
  const auto chain = [&](auto member) {
    return ordered(rep.arms[0].*member, rep.arms[1].*member) &&
           ordered(rep.arms[1].*member, rep.arms[2].*member);
  };
  rep.ordered_vconn = chain(&SandwichArm::vconn);
  rep.ordered_econn = chain(&SandwichArm::econn);
  rep.ordered_mindeg = chain(&SandwichArm::mindeg);
  rep.ordered_all = rep.ordered_vconn && rep.ordered_econn && rep.ordered_mindeg;
  return rep;
}

}  // namespace rsig
