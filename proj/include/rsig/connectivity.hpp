#pragma once

#include <cstdint>

#include "rsig/item_graph.hpp"
#include "rsig/model.hpp"

namespace rsig {

// Exact connectivity summary of one graph. The chain kappa_v <= kappa_e <=
// delta holds for every graph; report() enforces it.
struct ConnectivityReport {
  std::uint32_t kappa_v = 0;  // vertex connectivity (complete graph: n - 1)
  std::uint32_t kappa_e = 0;  // edge connectivity (0 when disconnected)
  std::uint32_t delta = 0;    // minimum vertex degree
};

struct KConnectivityFlags {
  bool vconn = false;   // kappa_v >= k
  bool econn = false;   // kappa_e >= k
  bool mindeg = false;  // delta >= k
};

// Minimum over vertices of the incident-edge count; 0 for n = 1.
std::uint32_t min_degree(const ItemGraph& g);

// Global minimum edge cut on unit weights via max-flow from a fixed source
// to every other vertex. 0 when disconnected or n = 1.
std::uint32_t edge_connectivity(const ItemGraph& g);

// Minimum vertex cut via unit-capacity vertex-split max-flow over Even's
// candidate schedule: one fixed min-degree source against its non-neighbors
// plus non-adjacent pairs among its neighbors. Complete graph: n - 1 by
// convention; single vertex: 0; disconnected: 0.
std::uint32_t vertex_connectivity(const ItemGraph& g);

// All three quantities; throws InternalOrderViolation if the chain breaks
// (that would be an algorithm bug, not a property of the input).
ConnectivityReport report(const ItemGraph& g);

// (kappa_v >= k, kappa_e >= k, delta >= k). Computes delta first and
// short-circuits to all-false when delta < k, then uses linear-time
// biconnectivity tests for k <= 2 and bounded max-flow probes for k >= 3.
KConnectivityFlags is_k_connected(const ItemGraph& g, const PropertyTarget& target);

// Testing oracle, exhaustive and independent of the flow machinery:
// kappa_v by trying every vertex subset of size < n - 1, kappa_e by trying
// every bipartition cut, delta by direct count. Throws TooLarge for n > 12.
ConnectivityReport brute_force_connectivity(const ItemGraph& g);

}  // namespace rsig
