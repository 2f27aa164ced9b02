#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "rsig/errors.hpp"
#include "rsig/model.hpp"

namespace rsig {

using VertexId = std::uint32_t;
using ItemId = std::uint64_t;
using Edge = std::pair<VertexId, VertexId>;  // normalized: first < second

// Default ceiling on the number of per-item pair-counter increments one
// edge materialization may perform. Dense regimes explode quadratically per
// item; exceeding the cap raises ResourceExceeded instead of thrashing.
inline constexpr std::uint64_t kDefaultPairWorkCap = 2'000'000'000ULL;

// Materializes the edge set {(i,j) : |items[i] ∩ items[j]| >= s} through an
// inverted index item -> vertices: per-pair shared counters for s >= 2, a
// per-item clique union for s = 1. Input item lists must be duplicate-free;
// output edges are normalized, deduplicated and sorted.
std::vector<Edge> build_edges(const std::vector<std::vector<ItemId>>& items,
                              std::uint32_t s,
                              std::uint64_t pair_work_cap = kDefaultPairWorkCap);

// An undirected simple graph plus the per-vertex item sets that induced it.
// Immutable after construction; freely shareable across threads.
class ItemGraph {
 public:
  // `items` lists must be sorted and duplicate-free; edges are derived.
  ItemGraph(std::vector<std::vector<ItemId>> items, std::uint32_t s, ModelKind model,
            std::uint64_t pair_work_cap = kDefaultPairWorkCap);

  VertexId vertex_count() const { return n_; }
  std::uint64_t edge_count() const { return m_; }
  std::uint32_t threshold() const { return s_; }
  ModelKind model() const { return model_; }

  const std::vector<ItemId>& items(VertexId v) const { return items_[v]; }
  const std::vector<VertexId>& neighbors(VertexId v) const { return adj_[v]; }
  std::uint32_t degree(VertexId v) const { return static_cast<std::uint32_t>(adj_[v].size()); }

  // Sorted list of normalized edges.
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_edge(VertexId u, VertexId v) const;

  bool operator==(const ItemGraph& other) const {
    return n_ == other.n_ && s_ == other.s_ && items_ == other.items_ &&
           edges_ == other.edges_;
  }

 private:
  VertexId n_;
  std::uint32_t s_;
  ModelKind model_;
  std::uint64_t m_;
  std::vector<std::vector<ItemId>> items_;
  std::vector<Edge> edges_;
  std::vector<std::vector<VertexId>> adj_;
};

}  // namespace rsig
