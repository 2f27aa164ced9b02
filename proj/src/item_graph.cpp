#include "rsig/item_graph.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace rsig {
namespace {

inline std::uint64_t pack(VertexId u, VertexId v) {
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

}  // namespace

std::vector<Edge> build_edges(const std::vector<std::vector<ItemId>>& items,
                              std::uint32_t s, std::uint64_t pair_work_cap) {
  if (s < 1) throw ConstraintViolated("build_edges requires s >= 1");

  // Inverted index as a flat (item, vertex) array sorted by item; vertex ids
  // ascend within each item group because the flatten order is by vertex.
  std::vector<std::pair<ItemId, VertexId>> slots;
  std::size_t total = 0;
  for (const auto& set : items) total += set.size();
  slots.reserve(total);
  for (VertexId v = 0; v < items.size(); ++v) {
    for (ItemId it : items[v]) slots.emplace_back(it, v);
  }
  std::stable_sort(slots.begin(), slots.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });

  // Projected pair work: sum of C(group, 2) over item groups. Checked before
  // any counting happens.
  std::uint64_t work = 0;
  for (std::size_t i = 0; i < slots.size();) {
    std::size_t j = i;
    while (j < slots.size() && slots[j].first == slots[i].first) ++j;
    const std::uint64_t g = j - i;
    work += g * (g - 1) / 2;
    if (work > pair_work_cap)
      throw ResourceExceeded("build_edges: projected pair work exceeds cap of " +
                             std::to_string(pair_work_cap) + " increments");
    i = j;
  }

  std::vector<Edge> edges;
  if (s == 1) {
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(work, 1u << 22)));
    for (std::size_t i = 0; i < slots.size();) {
      std::size_t j = i;
      while (j < slots.size() && slots[j].first == slots[i].first) ++j;
      for (std::size_t a = i; a < j; ++a) {
        for (std::size_t b = a + 1; b < j; ++b) {
          if (seen.insert(pack(slots[a].second, slots[b].second)).second) {
            edges.emplace_back(slots[a].second, slots[b].second);
          }
        }
      }
      i = j;
    }
  } else {
    std::unordered_map<std::uint64_t, std::uint32_t> counts;
    counts.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(work, 1u << 22)));
    for (std::size_t i = 0; i < slots.size();) {
      std::size_t j = i;
      while (j < slots.size() && slots[j].first == slots[i].first) ++j;
      for (std::size_t a = i; a < j; ++a) {
        for (std::size_t b = a + 1; b < j; ++b) {
          std::uint32_t c = ++counts[pack(slots[a].second, slots[b].second)];
          if (c == s) edges.emplace_back(slots[a].second, slots[b].second);
        }
      }
      i = j;
    }
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

ItemGraph::ItemGraph(std::vector<std::vector<ItemId>> items, std::uint32_t s,
                     ModelKind model, std::uint64_t pair_work_cap)
    : n_(static_cast<VertexId>(items.size())),
      s_(s),
      model_(model),
      items_(std::move(items)) {
  if (items_.size() > 0xFFFFFFFFull)
    throw ResourceExceeded("ItemGraph: vertex count exceeds 2^32 - 1");
  edges_ = build_edges(items_, s_, pair_work_cap);
  m_ = edges_.size();
  adj_.assign(n_, {});
  for (const auto& [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool ItemGraph::has_edge(VertexId u, VertexId v) const {
  if (u == v) return false;
  const auto& nb = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  VertexId other = adj_[u].size() <= adj_[v].size() ? v : u;
  return std::binary_search(nb.begin(), nb.end(), other);
}

}  // namespace rsig
