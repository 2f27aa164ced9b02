#include "rsig/connectivity.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <vector>

#include "rsig/errors.hpp"

namespace rsig {
namespace {

// ---------------------------------------------------------------------------
// Unit-capacity Dinic. Arcs are stored in pairs so arc^1 is the reverse arc.
// ---------------------------------------------------------------------------

class UnitFlow {
 public:
  explicit UnitFlow(std::uint32_t node_count)
      : adj_(node_count), level_(node_count), ptr_(node_count) {}

  void add_arc(std::uint32_t from, std::uint32_t to, std::int32_t cap) {
    arcs_.push_back({to, cap});
    arcs_.push_back({from, 0});
    adj_[from].push_back(static_cast<std::uint32_t>(arcs_.size()) - 2);
    adj_[to].push_back(static_cast<std::uint32_t>(arcs_.size()) - 1);
  }

  void reserve(std::size_t arc_count) { arcs_.reserve(2 * arc_count); }

  // Max flow from s to t, aborting once `limit` is reached. Capacities are
  // consumed; call snapshot()/restore() around repeated queries.
  std::int32_t max_flow(std::uint32_t s, std::uint32_t t, std::int32_t limit) {
    std::int32_t flow = 0;
    while (flow < limit && bfs(s, t)) {
      std::fill(ptr_.begin(), ptr_.end(), 0u);
      while (flow < limit && augment(s, t)) ++flow;
    }
    return flow;
  }

  void snapshot() {
    caps_.resize(arcs_.size());
    for (std::size_t i = 0; i < arcs_.size(); ++i) caps_[i] = arcs_[i].cap;
  }

  void restore() {
    for (std::size_t i = 0; i < arcs_.size(); ++i) arcs_[i].cap = caps_[i];
  }

 private:
  struct Arc {
    std::uint32_t to;
    std::int32_t cap;
  };

  bool bfs(std::uint32_t s, std::uint32_t t) {
    std::fill(level_.begin(), level_.end(), -1);
    queue_.clear();
    queue_.push_back(s);
    level_[s] = 0;
    for (std::size_t qi = 0; qi < queue_.size(); ++qi) {
      std::uint32_t v = queue_[qi];
      for (std::uint32_t id : adj_[v]) {
        const Arc& a = arcs_[id];
        if (a.cap > 0 && level_[a.to] < 0) {
          level_[a.to] = level_[v] + 1;
          if (a.to == t) return true;
          queue_.push_back(a.to);
        }
      }
    }
    return false;
  }

  // One unit along a level-respecting path, iteratively (graphs can be deep).
  bool augment(std::uint32_t s, std::uint32_t t) {
    path_.clear();
    std::uint32_t v = s;
    while (true) {
      if (v == t) {
        for (std::uint32_t id : path_) {
          --arcs_[id].cap;
          ++arcs_[id ^ 1].cap;
        }
        return true;
      }
      bool advanced = false;
      for (std::uint32_t& i = ptr_[v]; i < adj_[v].size(); ++i) {
        const std::uint32_t id = adj_[v][i];
        const Arc& a = arcs_[id];
        if (a.cap > 0 && level_[a.to] == level_[v] + 1) {
          path_.push_back(id);
          v = a.to;
          advanced = true;
          break;
        }
      }
      if (!advanced) {
        level_[v] = -1;  // dead end; prune from this phase
        if (v == s) return false;
        v = arcs_[path_.back() ^ 1].to;
        path_.pop_back();
        ++ptr_[v];
      }
    }
  }

  std::vector<std::vector<std::uint32_t>> adj_;
  std::vector<Arc> arcs_;
  std::vector<std::int32_t> caps_;
  std::vector<int> level_;
  std::vector<std::uint32_t> ptr_;
  std::vector<std::uint32_t> queue_;
  std::vector<std::uint32_t> path_;
};

// Digraph for s-t edge connectivity: every undirected edge becomes two unit
// arcs (each with a zero-capacity reverse).
UnitFlow make_edge_network(const ItemGraph& g) {
  UnitFlow net(g.vertex_count());
  net.reserve(2 * g.edge_count());
  for (const auto& [u, v] : g.edges()) {
    net.add_arc(u, v, 1);
    net.add_arc(v, u, 1);
  }
  net.snapshot();
  return net;
}

// Vertex-split digraph for s-t vertex connectivity: node 2v is v_in, 2v+1 is
// v_out; the internal arc carries capacity 1. Querying from u_out to w_in
// bypasses the endpoints' own internal arcs.
UnitFlow make_vertex_network(const ItemGraph& g) {
  UnitFlow net(2 * g.vertex_count());
  net.reserve(2 * g.vertex_count() + 4 * g.edge_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) net.add_arc(2 * v, 2 * v + 1, 1);
  for (const auto& [u, v] : g.edges()) {
    net.add_arc(2 * u + 1, 2 * v, 1);
    net.add_arc(2 * v + 1, 2 * u, 1);
  }
  net.snapshot();
  return net;
}

// ---------------------------------------------------------------------------
// Linear-time pieces: BFS connectivity, bridges, articulation points.
// ---------------------------------------------------------------------------

bool is_connected(const ItemGraph& g) {
  const VertexId n = g.vertex_count();
  if (n <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  VertexId visited = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (VertexId w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++visited;
        stack.push_back(w);
      }
    }
  }
  return visited == n;
}

// Iterative Tarjan lowlink pass reporting whether any bridge / articulation
// point exists. Assumes the graph is connected (checked by callers).
struct BiconnectivityScan {
  bool has_bridge = false;
  bool has_articulation = false;
};

BiconnectivityScan scan_biconnectivity(const ItemGraph& g) {
  const VertexId n = g.vertex_count();
  BiconnectivityScan out;
  if (n == 0) return out;
  std::vector<std::uint32_t> disc(n, 0), low(n, 0);
  std::vector<VertexId> parent(n, n);
  std::vector<std::uint32_t> child_idx(n, 0);
  std::vector<VertexId> stack;
  std::uint32_t timer = 1;
  std::uint32_t root_children = 0;

  stack.push_back(0);
  disc[0] = low[0] = timer++;
  while (!stack.empty()) {
    VertexId v = stack.back();
    const auto& nb = g.neighbors(v);
    if (child_idx[v] < nb.size()) {
      VertexId w = nb[child_idx[v]++];
      if (disc[w] == 0) {
        parent[w] = v;
        if (v == 0) ++root_children;
        disc[w] = low[w] = timer++;
        stack.push_back(w);
      } else if (w != parent[v]) {
        low[v] = std::min(low[v], disc[w]);
      }
      // parallel edges cannot occur in a simple graph, so a single parent
      // skip is sound
    } else {
      stack.pop_back();
      if (!stack.empty()) {
        VertexId p = stack.back();
        low[p] = std::min(low[p], low[v]);
        if (low[v] > disc[p]) out.has_bridge = true;
        if (p != 0 && low[v] >= disc[p]) out.has_articulation = true;
      }
    }
  }
  if (root_children > 1) out.has_articulation = true;
  return out;
}

bool is_complete(const ItemGraph& g) {
  const std::uint64_t n = g.vertex_count();
  return n <= 1 || g.edge_count() == n * (n - 1) / 2;
}

VertexId min_degree_vertex(const ItemGraph& g) {
  VertexId best = 0;
  for (VertexId v = 1; v < g.vertex_count(); ++v) {
    if (g.degree(v) < g.degree(best)) best = v;
  }
  return best;
}

// Edge connectivity bounded above by `cap`: min over v != u0 of the u0->v
// max flow, each probe aborted at the running best.
std::uint32_t edge_connectivity_bounded(const ItemGraph& g, std::uint32_t cap) {
  const VertexId n = g.vertex_count();
  if (n <= 1) return 0;
  UnitFlow net = make_edge_network(g);
  const VertexId u0 = min_degree_vertex(g);
  std::int32_t best = static_cast<std::int32_t>(std::min(cap, g.degree(u0)));
  for (VertexId v = 0; v < n && best > 0; ++v) {
    if (v == u0) continue;
    net.restore();
    best = std::min(best, net.max_flow(u0, v, best));
  }
  return static_cast<std::uint32_t>(best);
}

// Vertex connectivity bounded above by `cap`, Even's candidate schedule.
std::uint32_t vertex_connectivity_bounded(const ItemGraph& g, std::uint32_t cap) {
  const VertexId n = g.vertex_count();
  if (n <= 1) return 0;
  const VertexId u0 = min_degree_vertex(g);
  std::int32_t best =
      static_cast<std::int32_t>(std::min<std::uint32_t>({cap, g.degree(u0), n - 1}));
  if (best == 0) return 0;

  UnitFlow net = make_vertex_network(g);
  for (VertexId v = 0; v < n && best > 0; ++v) {
    if (v == u0 || g.has_edge(u0, v)) continue;
    net.restore();
    best = std::min(best, net.max_flow(2 * u0 + 1, 2 * v, best));
  }
  const auto& nb = g.neighbors(u0);
  for (std::size_t a = 0; a < nb.size() && best > 0; ++a) {
    for (std::size_t b = a + 1; b < nb.size() && best > 0; ++b) {
      if (g.has_edge(nb[a], nb[b])) continue;
      net.restore();
      best = std::min(best, net.max_flow(2 * nb[a] + 1, 2 * nb[b], best));
    }
  }
  return static_cast<std::uint32_t>(best);
}

}  // namespace

std::uint32_t min_degree(const ItemGraph& g) {
  const VertexId n = g.vertex_count();
  if (n == 0) return 0;
  std::uint32_t d = std::numeric_limits<std::uint32_t>::max();
  for (VertexId v = 0; v < n; ++v) d = std::min(d, g.degree(v));
  return d;
}

std::uint32_t edge_connectivity(const ItemGraph& g) {
  return edge_connectivity_bounded(g, std::numeric_limits<std::int32_t>::max() / 2);
}

std::uint32_t vertex_connectivity(const ItemGraph& g) {
  return vertex_connectivity_bounded(g, std::numeric_limits<std::int32_t>::max() / 2);
}

ConnectivityReport report(const ItemGraph& g) {
  ConnectivityReport r;
  r.delta = min_degree(g);
  r.kappa_e = edge_connectivity(g);
  r.kappa_v = vertex_connectivity(g);
  if (!(r.kappa_v <= r.kappa_e && r.kappa_e <= r.delta))
    throw InternalOrderViolation(
        "connectivity chain violated: kappa_v = " + std::to_string(r.kappa_v) +
        ", kappa_e = " + std::to_string(r.kappa_e) + ", delta = " + std::to_string(r.delta));
  return r;
}

KConnectivityFlags is_k_connected(const ItemGraph& g, const PropertyTarget& target) {
  const std::uint32_t k = target.k;
  KConnectivityFlags f;
  // delta is the cheap filter: below threshold almost every failure is a
  // degree failure.
  if (min_degree(g) < k) return f;
  f.mindeg = true;
  const VertexId n = g.vertex_count();

  if (k == 1) {
    f.econn = f.vconn = is_connected(g);
  } else if (k == 2) {
    if (is_connected(g)) {
      const BiconnectivityScan scan = scan_biconnectivity(g);
      f.econn = !scan.has_bridge;
      // kappa_v >= 2 needs n >= 3 on top of biconnectivity; K_2 has
      // kappa_v = 1.
      f.vconn = n >= 3 && !scan.has_articulation;
    }
  } else {
    f.econn = edge_connectivity_bounded(g, k) >= k;
    f.vconn = f.econn && vertex_connectivity_bounded(g, k) >= k;
  }

  if ((f.vconn && !f.econn) || (f.econn && !f.mindeg))
    throw InternalOrderViolation("is_k_connected implication chain violated");
  return f;
}

ConnectivityReport brute_force_connectivity(const ItemGraph& g) {
  const VertexId n = g.vertex_count();
  if (n > 12) throw TooLarge("brute_force_connectivity limited to n <= 12");
  ConnectivityReport r;
  r.delta = min_degree(g);
  if (n <= 1) return r;

  // Connectivity of the subgraph induced by `mask` (must be non-empty).
  auto connected_within = [&](std::uint32_t mask) {
    const std::uint32_t first = static_cast<std::uint32_t>(__builtin_ctz(mask));
    std::uint32_t seen = 1u << first;
    std::vector<VertexId> stack{first};
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (VertexId w : g.neighbors(v)) {
        const std::uint32_t bit = 1u << w;
        if ((mask & bit) && !(seen & bit)) {
          seen |= bit;
          stack.push_back(w);
        }
      }
    }
    return seen == mask;
  };

  const std::uint32_t full = (n == 32) ? 0xFFFFFFFFu : ((1u << n) - 1);

  // kappa_v: smallest removal set whose complement is disconnected; a
  // complete graph never disconnects and gets n - 1 by convention.
  std::uint32_t kv = n - 1;
  for (std::uint32_t removed = 0; removed < (1u << n); ++removed) {
    const std::uint32_t size = static_cast<std::uint32_t>(__builtin_popcount(removed));
    if (size >= kv || size > n - 2) continue;
    if (!connected_within(full & ~removed)) kv = size;
  }
  r.kappa_v = kv;

  // kappa_e: min cut over all bipartitions (vertex 0 pinned to one side,
  // the other side never empty).
  std::uint32_t ke = std::numeric_limits<std::uint32_t>::max();
  for (std::uint32_t side = 0; side + 1 < (1u << (n - 1)); ++side) {
    const std::uint32_t mask = (side << 1) | 1u;
    std::uint32_t cut = 0;
    for (const auto& [u, v] : g.edges()) {
      const bool su = (mask >> u) & 1u;
      const bool sv = (mask >> v) & 1u;
      if (su != sv) ++cut;
    }
    ke = std::min(ke, cut);
  }
  r.kappa_e = (ke == std::numeric_limits<std::uint32_t>::max()) ? 0 : ke;
  return r;
}

}  // namespace rsig
