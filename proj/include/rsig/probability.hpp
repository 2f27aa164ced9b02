#pragma once

#include <cstdint>

namespace rsig {

// Exact and asymptotic edge probability of one model at one parameter point.
struct EdgeProbability {
  double exact = 0.0;       // in [0, 1]
  double asymptotic = 0.0;  // raw scaling quantity, may exceed 1
  double abs_gap = 0.0;     // |exact - asymptotic|
};

// P[|A ∩ B| >= s] for independent uniform K-subsets A, B of a P-item pool:
// sum over r >= s of C(K,r) C(P-K,K-r) / C(P,K). Short-circuits to 1 when
// P < 2K - s (any two K-subsets are forced to overlap in >= s items).
// Exact rational arithmetic for P <= 60, compensated log-space summation
// otherwise; relative accuracy ~1e-12 over the supported range.
double uniform_edge_prob_exact(std::uint64_t K, std::uint64_t P, std::uint32_t s);

// P[Binomial(P, t^2) >= s]: each item lands on both endpoints of a fixed
// vertex pair independently with probability t^2, so the shared count is
// binomial. Complement sum over the (at most s <= 16) lower terms when the
// result is large; mode-anchored tail summation when it is small.
double binomial_edge_prob_exact(double t, std::uint64_t P, std::uint32_t s);

// (1/s!) * K^{2s} / P^s, the scaling-side quantity the threshold equations
// are written in. Not clamped to [0, 1].
double uniform_edge_prob_asymptotic(std::uint64_t K, std::uint64_t P, std::uint32_t s);
double uniform_edge_prob_asymptotic(double K, std::uint64_t P, std::uint32_t s);

// (1/s!) * t^{2s} * P^s.
double binomial_edge_prob_asymptotic(double t, std::uint64_t P, std::uint32_t s);

EdgeProbability uniform_edge_probability(std::uint64_t K, std::uint64_t P, std::uint32_t s);
EdgeProbability binomial_edge_probability(double t, std::uint64_t P, std::uint32_t s);

}  // namespace rsig
