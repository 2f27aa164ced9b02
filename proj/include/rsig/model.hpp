#pragma once

#include <cstdint>
#include <string>

#include "rsig/errors.hpp"

namespace rsig {

// s and k are constants of the model family, not quantities that scale with
// n. Capping them keeps factorials and tail sums exact in double precision.
inline constexpr std::uint32_t kDefaultThresholdCap = 16;

enum class ModelKind { kUniform, kBinomial };

inline const char* to_string(ModelKind m) {
  return m == ModelKind::kUniform ? "uniform" : "binomial";
}

// Parameters of the uniform model G_s(n, K, P): n vertices, each holding a
// uniformly random K-subset of a pool of P items; vertices are adjacent iff
// they share at least s items.
struct UniformParams {
  std::uint64_t n = 0;
  std::uint64_t K = 0;
  std::uint64_t P = 0;
  std::uint32_t s = 0;
};

// Parameters of the binomial model H_s(n, t, P): each of the P pool items is
// given to each of the n vertices independently with probability t.
struct BinomialParams {
  std::uint64_t n = 0;
  double t = 0.0;
  std::uint64_t P = 0;
  std::uint32_t s = 0;
};

// Connectivity / degree level probed by the experiment layer.
struct PropertyTarget {
  std::uint32_t k = 1;
};

// Checks 1 <= s <= K <= P and n >= 1. Never clamps: a violated inequality is
// reported verbatim in the exception message.
inline UniformParams validate_uniform(std::uint64_t n, std::uint64_t K,
                                      std::uint64_t P, std::uint32_t s,
                                      std::uint32_t s_cap = kDefaultThresholdCap) {
  if (n < 1) throw ConstraintViolated("uniform params: n >= 1 violated (n = " + std::to_string(n) + ")");
  if (s < 1) throw ConstraintViolated("uniform params: s >= 1 violated (s = " + std::to_string(s) + ")");
  if (s > s_cap)
    throw ConstraintViolated("uniform params: s <= " + std::to_string(s_cap) +
                             " violated (s = " + std::to_string(s) + ")");
  if (static_cast<std::uint64_t>(s) > K)
    throw ConstraintViolated("uniform params: s <= K violated (s = " + std::to_string(s) +
                             ", K = " + std::to_string(K) + ")");
  if (K > P)
    throw ConstraintViolated("uniform params: K <= P violated (K = " + std::to_string(K) +
                             ", P = " + std::to_string(P) + ")");
  return UniformParams{n, K, P, s};
}

// Checks 1 <= s <= P, 0 <= t <= 1 and n >= 1.
inline BinomialParams validate_binomial(std::uint64_t n, double t, std::uint64_t P,
                                        std::uint32_t s,
                                        std::uint32_t s_cap = kDefaultThresholdCap) {
  if (n < 1) throw ConstraintViolated("binomial params: n >= 1 violated (n = " + std::to_string(n) + ")");
  if (s < 1) throw ConstraintViolated("binomial params: s >= 1 violated (s = " + std::to_string(s) + ")");
  if (s > s_cap)
    throw ConstraintViolated("binomial params: s <= " + std::to_string(s_cap) +
                             " violated (s = " + std::to_string(s) + ")");
  if (static_cast<std::uint64_t>(s) > P)
    throw ConstraintViolated("binomial params: s <= P violated (s = " + std::to_string(s) +
                             ", P = " + std::to_string(P) + ")");
  if (!(t >= 0.0) || !(t <= 1.0))
    throw ConstraintViolated("binomial params: 0 <= t <= 1 violated (t = " + std::to_string(t) + ")");
  return BinomialParams{n, t, P, s};
}

inline PropertyTarget validate_target(std::uint32_t k,
                                      std::uint32_t k_cap = kDefaultThresholdCap) {
  if (k < 1) throw ConstraintViolated("property target: k >= 1 violated");
  if (k > k_cap)
    throw ConstraintViolated("property target: k <= " + std::to_string(k_cap) +
                             " violated (k = " + std::to_string(k) + ")");
  return PropertyTarget{k};
}

}  // namespace rsig
