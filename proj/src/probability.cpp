#include "rsig/probability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "rsig/errors.hpp"

namespace rsig {
namespace {

constexpr double kRelTol = 1e-18;  // per-term early-exit threshold

// Kahan-compensated accumulator.
struct Kahan {
  double sum = 0.0;
  double c = 0.0;
  void add(double x) {
    double y = x - c;
    double t = sum + y;
    c = (t - sum) - y;
    sum = t;
  }
};

// log C(a, b). For moderate b (or a-b) the log factors are summed directly,
// which keeps the absolute error of the *difference* tiny; lgamma would lose
// ~|lgamma(a)|*eps absolute, far too coarse at a ~ 1e9.
double log_choose(std::uint64_t a, std::uint64_t b) {
  if (b > a) return -std::numeric_limits<double>::infinity();
  b = std::min(b, a - b);
  if (b == 0) return 0.0;
  constexpr std::uint64_t kDirectCap = 1u << 20;
  if (b <= kDirectCap) {
    Kahan acc;
    for (std::uint64_t i = 0; i < b; ++i) {
      acc.add(std::log(static_cast<double>(a - i) / static_cast<double>(i + 1)));
    }
    return acc.sum;
  }
  return std::lgamma(static_cast<double>(a) + 1.0) -
         std::lgamma(static_cast<double>(b) + 1.0) -
         std::lgamma(static_cast<double>(a - b) + 1.0);
}

// Exact C(a, b) in 64 bits; caller guarantees a <= 60 so C(60, 30) fits.
std::uint64_t choose_u64(std::uint64_t a, std::uint64_t b) {
  if (b > a) return 0;
  b = std::min(b, a - b);
  unsigned __int128 num = 1;
  for (std::uint64_t i = 0; i < b; ++i) {
    num = num * (a - i) / (i + 1);  // exact: prefix products are binomials
  }
  return static_cast<std::uint64_t>(num);
}

double factorial(std::uint32_t s) {
  double f = 1.0;
  for (std::uint32_t i = 2; i <= s; ++i) f *= i;
  return f;
}

// Sums exp(log_term(r)) for r in [lo, hi], walking outward from `anchor`
// (the mode) so that terms are added in decreasing order per direction and
// the early exit is sound for a unimodal term sequence.
template <typename LogTerm>
double sum_unimodal(std::int64_t lo, std::int64_t hi, std::int64_t anchor, LogTerm log_term) {
  if (lo > hi) return 0.0;
  anchor = std::clamp(anchor, lo, hi);
  Kahan acc;
  for (std::int64_t r = anchor; r >= lo; --r) {
    double term = std::exp(log_term(r));
    acc.add(term);
    if (term < kRelTol * acc.sum) break;
  }
  for (std::int64_t r = anchor + 1; r <= hi; ++r) {
    double term = std::exp(log_term(r));
    acc.add(term);
    if (term < kRelTol * acc.sum) break;
  }
  return acc.sum;
}

double pow_int(double base, std::uint32_t e) {
  double r = 1.0;
  while (e > 0) {
    if (e & 1u) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

}  // namespace

double uniform_edge_prob_exact(std::uint64_t K, std::uint64_t P, std::uint32_t s) {
  if (s < 1 || static_cast<std::uint64_t>(s) > K || K > P)
    throw ConstraintViolated("uniform_edge_prob_exact requires 1 <= s <= K <= P");

  // Overlap of two K-subsets of a P-pool is at least 2K - P; if that floor
  // already reaches s the edge is certain.
  if (P + s < 2 * K) return 1.0;

  const std::int64_t r_min = (2 * K > P) ? static_cast<std::int64_t>(2 * K - P) : 0;
  const std::int64_t r_max = static_cast<std::int64_t>(K);
  const std::int64_t sv = static_cast<std::int64_t>(s);

  if (P <= 60) {
    // Exact rational path: everything fits in 64-bit integers.
    std::uint64_t num = 0;
    for (std::int64_t r = sv; r <= r_max; ++r) {
      num += choose_u64(K, static_cast<std::uint64_t>(r)) *
             choose_u64(P - K, K - static_cast<std::uint64_t>(r));
    }
    const std::uint64_t den = choose_u64(P, K);
    return static_cast<double>(static_cast<long double>(num) / static_cast<long double>(den));
  }

  const double log_den = log_choose(P, K);
  auto log_term = [&](std::int64_t r) {
    return log_choose(K, static_cast<std::uint64_t>(r)) +
           log_choose(P - K, K - static_cast<std::uint64_t>(r)) - log_den;
  };

  // Lower terms r in [r_min, s-1]: at most s <= 16 of them. When their total
  // stays below 1/2 the complement 1 - sum is the better-conditioned route.
  Kahan lower;
  for (std::int64_t r = r_min; r < sv; ++r) lower.add(std::exp(log_term(r)));
  if (lower.sum <= 0.5) return std::min(1.0, 1.0 - lower.sum);

  // Small upper tail: sum outward from the hypergeometric mode.
  const std::int64_t mode = static_cast<std::int64_t>(
      ((static_cast<double>(K) + 1.0) * (static_cast<double>(K) + 1.0)) /
      (static_cast<double>(P) + 2.0));
  double tail = sum_unimodal(sv, r_max, mode, log_term);
  return std::clamp(tail, 0.0, 1.0);
}

double binomial_edge_prob_exact(double t, std::uint64_t P, std::uint32_t s) {
  if (s < 1 || static_cast<std::uint64_t>(s) > P)
    throw ConstraintViolated("binomial_edge_prob_exact requires 1 <= s <= P");
  if (!(t >= 0.0) || !(t <= 1.0))
    throw ConstraintViolated("binomial_edge_prob_exact requires 0 <= t <= 1");

  const double p = t * t;
  if (p == 0.0) return 0.0;
  if (p == 1.0) return 1.0;

  const double log_p = 2.0 * std::log(t);
  const double log_q = std::log1p(-p);
  auto log_term = [&](std::int64_t j) {
    return log_choose(P, static_cast<std::uint64_t>(j)) +
           static_cast<double>(j) * log_p + static_cast<double>(P - j) * log_q;
  };

  // P[X >= s] = 1 - P[X <= s-1]; the complement has at most s <= 16 terms.
  Kahan lower;
  for (std::int64_t j = 0; j < static_cast<std::int64_t>(s); ++j) lower.add(std::exp(log_term(j)));
  if (lower.sum <= 0.5) return std::min(1.0, 1.0 - lower.sum);

  const std::int64_t mode = static_cast<std::int64_t>((static_cast<double>(P) + 1.0) * p);
  double tail = sum_unimodal(static_cast<std::int64_t>(s), static_cast<std::int64_t>(P),
                             mode, log_term);
  return std::clamp(tail, 0.0, 1.0);
}

double uniform_edge_prob_asymptotic(double K, std::uint64_t P, std::uint32_t s) {
  if (s < 1) throw ConstraintViolated("asymptotic edge probability requires s >= 1");
  const double ratio = K * K / static_cast<double>(P);
  return pow_int(ratio, s) / factorial(s);
}

double uniform_edge_prob_asymptotic(std::uint64_t K, std::uint64_t P, std::uint32_t s) {
  return uniform_edge_prob_asymptotic(static_cast<double>(K), P, s);
}

double binomial_edge_prob_asymptotic(double t, std::uint64_t P, std::uint32_t s) {
  if (s < 1) throw ConstraintViolated("asymptotic edge probability requires s >= 1");
  const double ratio = t * t * static_cast<double>(P);
  return pow_int(ratio, s) / factorial(s);
}

EdgeProbability uniform_edge_probability(std::uint64_t K, std::uint64_t P, std::uint32_t s) {
  EdgeProbability ep;
  ep.exact = uniform_edge_prob_exact(K, P, s);
  ep.asymptotic = uniform_edge_prob_asymptotic(K, P, s);
  ep.abs_gap = std::fabs(ep.exact - ep.asymptotic);
  return ep;
}

EdgeProbability binomial_edge_probability(double t, std::uint64_t P, std::uint32_t s) {
  EdgeProbability ep;
  ep.exact = binomial_edge_prob_exact(t, P, s);
  ep.asymptotic = binomial_edge_prob_asymptotic(t, P, s);
  ep.abs_gap = std::fabs(ep.exact - ep.asymptotic);
  return ep;
}

}  // namespace rsig
