#include "rsig/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_map>

namespace rsig {
namespace detail {

std::vector<ItemId> random_prefix(std::uint64_t P, std::uint64_t K, SplitMix64& rng) {
  // Sparse Fisher-Yates: `moved` records displaced entries of the implicit
  // identity array, everything else still holds its own index.
  std::unordered_map<std::uint64_t, std::uint64_t> moved;
  moved.reserve(static_cast<std::size_t>(2 * K));
  std::vector<ItemId> prefix(K);
  for (std::uint64_t i = 0; i < K; ++i) {
    const std::uint64_t j = i + rng.next_below(P - i);
    auto it = moved.find(j);
    const std::uint64_t vj = (it == moved.end()) ? j : it->second;
    if (j != i) {
      auto self = moved.find(i);
      const std::uint64_t vi = (self == moved.end()) ? i : self->second;
      moved[j] = vi;
    }
    prefix[i] = vj;
  }
  return prefix;
}

std::vector<ItemId> bernoulli_items(std::uint64_t P, double t, SplitMix64& rng) {
  std::vector<ItemId> out;
  if (t <= 0.0 || P == 0) return out;
  if (t >= 1.0) {
    out.resize(P);
    for (std::uint64_t i = 0; i < P; ++i) out[i] = i;
    return out;
  }
  // Gap between successive members is geometric(t); one log per member
  // instead of one Bernoulli per item.
  const double log_skip = std::log1p(-t);
  double cur = 0.0;
  const double limit = static_cast<double>(P);
  while (true) {
    const double u = rng.next_double();
    const double gap = std::floor(std::log1p(-u) / log_skip);
    cur += gap;
    if (!(cur < limit)) break;
    out.push_back(static_cast<ItemId>(cur));
    cur += 1.0;
  }
  return out;
}

}  // namespace detail

namespace {

void check_vertex_count(std::uint64_t n) {
  if (n > 0xFFFFFFFFull)
    throw ResourceExceeded("sampler: n = " + std::to_string(n) + " exceeds 2^32 - 1 vertices");
}

// Independent per-vertex generators keyed off the call seed, so per-vertex
// draws do not depend on evaluation order.
SplitMix64 vertex_rng(std::uint64_t call_seed, VertexId v) {
  return SplitMix64(derive_seed(call_seed, v));
}

}  // namespace

std::vector<ItemGraph> sample_uniform_family(std::uint64_t n, std::uint64_t P,
                                             std::uint32_t s,
                                             const std::vector<std::uint64_t>& Ks,
                                             const Seed& seed, const SamplerOptions& opts) {
  if (Ks.empty()) throw CouplingMismatch("uniform family requires at least one K");
  for (std::size_t i = 0; i < Ks.size(); ++i) {
    validate_uniform(n, Ks[i], P, s);
    if (i > 0 && Ks[i - 1] > Ks[i])
      throw CouplingMismatch("uniform family requires non-decreasing K values");
  }
  check_vertex_count(n);
  const std::uint64_t K_top = Ks.back();
  const std::uint64_t call_seed = seed_of(seed);

  std::vector<std::vector<std::vector<ItemId>>> items(
      Ks.size(), std::vector<std::vector<ItemId>>(static_cast<std::size_t>(n)));
  for (VertexId v = 0; v < n; ++v) {
    SplitMix64 rng = vertex_rng(call_seed, v);
    const std::vector<ItemId> prefix = detail::random_prefix(P, K_top, rng);
    for (std::size_t g = 0; g < Ks.size(); ++g) {
      auto& set = items[g][v];
      set.assign(prefix.begin(), prefix.begin() + Ks[g]);
      std::sort(set.begin(), set.end());
    }
  }
  std::vector<ItemGraph> graphs;
  graphs.reserve(Ks.size());
  for (auto& per_vertex : items)
    graphs.emplace_back(std::move(per_vertex), s, ModelKind::kUniform, opts.pair_work_cap);
  return graphs;
}

std::vector<ItemGraph> sample_binomial_family(std::uint64_t n, std::uint64_t P,
                                              std::uint32_t s, const std::vector<double>& ts,
                                              const Seed& seed, const SamplerOptions& opts) {
  if (ts.empty()) throw CouplingMismatch("binomial family requires at least one t");
  for (std::size_t i = 0; i < ts.size(); ++i) {
    validate_binomial(n, ts[i], P, s);
    if (i > 0 && ts[i - 1] > ts[i])
      throw CouplingMismatch("binomial family requires non-decreasing t values");
  }
  check_vertex_count(n);
  const double t_top = ts.back();
  const std::uint64_t call_seed = seed_of(seed);

  std::vector<std::vector<std::vector<ItemId>>> items(
      ts.size(), std::vector<std::vector<ItemId>>(static_cast<std::size_t>(n)));
  for (VertexId v = 0; v < n; ++v) {
    SplitMix64 rng = vertex_rng(call_seed, v);
    const std::vector<ItemId> top = detail::bernoulli_items(P, t_top, rng);
    // A top-level member carries one uniform draw; level g keeps it iff the
    // draw falls below t_g / t_top. Jointly this is the shared-uniform
    // coupling: kept at level g with probability exactly t_g, monotonically
    // across levels.
    items[ts.size() - 1][v] = top;
    if (ts.size() > 1) {
      for (ItemId it : top) {
        const double u = rng.next_double() * t_top;
        for (std::size_t g = 0; g + 1 < ts.size(); ++g) {
          if (u < ts[g]) items[g][v].push_back(it);
        }
      }
    }
  }
  std::vector<ItemGraph> graphs;
  graphs.reserve(ts.size());
  for (auto& per_vertex : items)
    graphs.emplace_back(std::move(per_vertex), s, ModelKind::kBinomial, opts.pair_work_cap);
  return graphs;
}

ItemGraph sample_uniform(const UniformParams& params, const Seed& seed,
                         const SamplerOptions& opts) {
  check_vertex_count(params.n);
  const std::uint64_t call_seed = seed_of(seed);
  std::vector<std::vector<ItemId>> items(static_cast<std::size_t>(params.n));
  for (VertexId v = 0; v < params.n; ++v) {
    SplitMix64 rng = vertex_rng(call_seed, v);
    items[v] = detail::random_prefix(params.P, params.K, rng);
    std::sort(items[v].begin(), items[v].end());
  }
  return ItemGraph(std::move(items), params.s, ModelKind::kUniform, opts.pair_work_cap);
}

ItemGraph sample_binomial(const BinomialParams& params, const Seed& seed,
                          const SamplerOptions& opts) {
  check_vertex_count(params.n);
  const std::uint64_t call_seed = seed_of(seed);
  std::vector<std::vector<ItemId>> items(static_cast<std::size_t>(params.n));
  for (VertexId v = 0; v < params.n; ++v) {
    SplitMix64 rng = vertex_rng(call_seed, v);
    items[v] = detail::bernoulli_items(params.P, params.t, rng);
  }
  return ItemGraph(std::move(items), params.s, ModelKind::kBinomial, opts.pair_work_cap);
}

std::pair<ItemGraph, ItemGraph> sample_uniform_coupled(const UniformParams& params_lo,
                                                       const UniformParams& params_hi,
                                                       const Seed& seed,
                                                       const SamplerOptions& opts) {
  if (params_lo.n != params_hi.n || params_lo.P != params_hi.P ||
      params_lo.s != params_hi.s)
    throw CouplingMismatch("uniform coupling requires identical n, P, s");
  if (params_lo.K > params_hi.K)
    throw CouplingMismatch("uniform coupling requires K_lo <= K_hi");
  std::vector<ItemGraph> family = sample_uniform_family(
      params_lo.n, params_lo.P, params_lo.s, {params_lo.K, params_hi.K}, seed, opts);
  return {std::move(family[0]), std::move(family[1])};
}

std::pair<ItemGraph, ItemGraph> sample_binomial_coupled(const BinomialParams& params_lo,
                                                        const BinomialParams& params_hi,
                                                        const Seed& seed,
                                                        const SamplerOptions& opts) {
  if (params_lo.n != params_hi.n || params_lo.P != params_hi.P ||
      params_lo.s != params_hi.s)
    throw CouplingMismatch("binomial coupling requires identical n, P, s");
  if (params_lo.t > params_hi.t)
    throw CouplingMismatch("binomial coupling requires t_lo <= t_hi");
  std::vector<ItemGraph> family = sample_binomial_family(
      params_lo.n, params_lo.P, params_lo.s, {params_lo.t, params_hi.t}, seed, opts);
  return {std::move(family[0]), std::move(family[1])};
}

}  // namespace rsig
