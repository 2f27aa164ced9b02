#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "rsig/item_graph.hpp"
#include "rsig/model.hpp"
#include "rsig/rng.hpp"

namespace rsig {

// Knobs shared by all samplers.
struct SamplerOptions {
  std::uint64_t pair_work_cap = kDefaultPairWorkCap;
};

// One uniform-model graph: every vertex draws a uniformly random K-subset of
// [0, P), independently across vertices. Deterministic in (params, seed).
ItemGraph sample_uniform(const UniformParams& params, const Seed& seed,
                         const SamplerOptions& opts = {});

// One binomial-model graph: item membership is an independent Bernoulli(t)
// per (vertex, item), realized by geometric gap skipping.
ItemGraph sample_binomial(const BinomialParams& params, const Seed& seed,
                          const SamplerOptions& opts = {});

// Monotone coupled family: one graph per K in `Ks` (non-decreasing), every
// one sliced from the same per-vertex random permutation prefixes, so the
// edge sets form a chain under inclusion while each marginal stays exact.
std::vector<ItemGraph> sample_uniform_family(std::uint64_t n, std::uint64_t P,
                                             std::uint32_t s,
                                             const std::vector<std::uint64_t>& Ks,
                                             const Seed& seed,
                                             const SamplerOptions& opts = {});

// Same for the binomial model: membership levels t in `ts` (non-decreasing)
// share one conceptual uniform draw per (vertex, item).
std::vector<ItemGraph> sample_binomial_family(std::uint64_t n, std::uint64_t P,
                                              std::uint32_t s,
                                              const std::vector<double>& ts,
                                              const Seed& seed,
                                              const SamplerOptions& opts = {});

// Monotone coupled pair: each vertex draws one random permutation prefix of
// the pool of length K_hi; the lo graph uses its first K_lo entries. Both
// marginals are exact and edge_set(lo) ⊆ edge_set(hi) holds per sample.
// Requires identical (n, P, s) and K_lo <= K_hi.
std::pair<ItemGraph, ItemGraph> sample_uniform_coupled(const UniformParams& params_lo,
                                                       const UniformParams& params_hi,
                                                       const Seed& seed,
                                                       const SamplerOptions& opts = {});

// Monotone coupled pair for the binomial model: conceptually one uniform
// draw per (vertex, item), kept in lo iff below t_lo and in hi iff below
// t_hi. Requires identical (n, P, s) and t_lo <= t_hi.
std::pair<ItemGraph, ItemGraph> sample_binomial_coupled(const BinomialParams& params_lo,
                                                        const BinomialParams& params_hi,
                                                        const Seed& seed,
                                                        const SamplerOptions& opts = {});

namespace detail {

// Ordered prefix of a seeded random permutation of [0, P): partial
// Fisher-Yates over an implicit array, hash-map backed so large pools cost
// O(K) memory. Picking a longer prefix with the same rng state extends a
// shorter one, which is exactly the coupling the uniform sampler needs.
std::vector<ItemId> random_prefix(std::uint64_t P, std::uint64_t K, SplitMix64& rng);

// Strictly increasing item ids of one vertex under Bernoulli(t) membership,
// realized via geometric gaps.
std::vector<ItemId> bernoulli_items(std::uint64_t P, double t, SplitMix64& rng);

}  // namespace detail

}  // namespace rsig
