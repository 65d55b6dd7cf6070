#include "conlab/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>
#include <string>

namespace conlab {

OrientedNetwork::OrientedNetwork(int n, std::vector<Edge> edges, bool directed)
    : n_(n), directed_(directed), edges_(std::move(edges)) {
  if (n_ < 1) throw InvalidGraph("vertex count must be >= 1");
  std::set<std::pair<int, int>> seen;
  for (Edge& e : edges_) {
    if (e.tail < 0 || e.tail >= n_ || e.head < 0 || e.head >= n_) {
      throw InvalidGraph("edge endpoint out of range");
    }
    if (e.tail == e.head) throw InvalidGraph("self loops are not allowed");
    if (!std::isfinite(e.conductance)) {
      throw InvalidGraph("conductance must be finite");
    }
    if (!directed_ && e.tail > e.head) std::swap(e.tail, e.head);
    const std::pair<int, int> key =
        directed_ ? std::pair<int, int>{e.tail, e.head}
                  : std::pair<int, int>{std::min(e.tail, e.head),
                                        std::max(e.tail, e.head)};
    if (!seen.insert(key).second) {
      throw InvalidGraph("duplicate edge between vertices " +
                         std::to_string(e.tail) + " and " +
                         std::to_string(e.head));
    }
  }
}

bool OrientedNetwork::unit_conductances() const {
  for (const Edge& e : edges_) {
    if (e.conductance != 1.0) return false;
  }
  return true;
}

Eigen::MatrixXd OrientedNetwork::conductance_matrix() const {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n_, n_);
  for (const Edge& e : edges_) {
    a(e.tail, e.head) += e.conductance;
    if (!directed_) a(e.head, e.tail) += e.conductance;
  }
  return a;
}

Eigen::MatrixXd OrientedNetwork::coupling_matrix() const {
  Eigen::MatrixXd d = conductance_matrix();
  d.diagonal() -= d.rowwise().sum();
  return d;
}

std::vector<std::vector<int>> OrientedNetwork::neighbor_lists() const {
  std::vector<std::set<int>> nb(static_cast<std::size_t>(n_));
  for (const Edge& e : edges_) {
    nb[static_cast<std::size_t>(e.tail)].insert(e.head);
    nb[static_cast<std::size_t>(e.head)].insert(e.tail);
  }
  std::vector<std::vector<int>> out(static_cast<std::size_t>(n_));
  for (int v = 0; v < n_; ++v) {
    out[static_cast<std::size_t>(v)].assign(
        nb[static_cast<std::size_t>(v)].begin(),
        nb[static_cast<std::size_t>(v)].end());
  }
  return out;
}

namespace {

// BFS distances in the underlying undirected graph; -1 for unreachable.
std::vector<int> bfs_distances(const std::vector<std::vector<int>>& nb,
                               int source) {
  std::vector<int> dist(nb.size(), -1);
  std::deque<int> queue;
  dist[static_cast<std::size_t>(source)] = 0;
  queue.push_back(source);
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int w : nb[static_cast<std::size_t>(v)]) {
      if (dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

}  // namespace

bool OrientedNetwork::is_connected() const {
  const auto nb = neighbor_lists();
  const auto dist = bfs_distances(nb, 0);
  return std::none_of(dist.begin(), dist.end(),
                      [](int d) { return d < 0; });
}

int OrientedNetwork::diameter() const {
  const auto nb = neighbor_lists();
  int diam = 0;
  for (int v = 0; v < n_; ++v) {
    const auto dist = bfs_distances(nb, v);
    for (int d : dist) {
      if (d < 0) throw DisconnectedGraph("diameter of a disconnected graph");
      diam = std::max(diam, d);
    }
  }
  return diam;
}

int OrientedNetwork::regular_degree() const {
  const auto nb = neighbor_lists();
  const int d = static_cast<int>(nb[0].size());
  for (const auto& list : nb) {
    if (static_cast<int>(list.size()) != d) return -1;
  }
  return d;
}

Eigen::MatrixXi coboundary(const OrientedNetwork& net) {
  const int m = net.edge_count();
  const int n = net.vertex_count();
  Eigen::MatrixXi h = Eigen::MatrixXi::Zero(m, n);
  for (int e = 0; e < m; ++e) {
    const Edge& edge = net.edges()[static_cast<std::size_t>(e)];
    h(e, edge.head) = 1;
    h(e, edge.tail) = -1;
  }
  return h;
}

TreeCycleDecomposition spanning_tree_decomposition(const OrientedNetwork& net) {
  const int n = net.vertex_count();
  const int m = net.edge_count();
  const auto& edges = net.edges();

  // Incidence lists keyed by (neighbor, edge index) so BFS scans neighbors
  // in ascending id order deterministically.
  std::vector<std::vector<std::pair<int, int>>> inc(
      static_cast<std::size_t>(n));
  for (int e = 0; e < m; ++e) {
    inc[static_cast<std::size_t>(edges[static_cast<std::size_t>(e)].tail)]
        .push_back({edges[static_cast<std::size_t>(e)].head, e});
    inc[static_cast<std::size_t>(edges[static_cast<std::size_t>(e)].head)]
        .push_back({edges[static_cast<std::size_t>(e)].tail, e});
  }
  for (auto& list : inc) std::sort(list.begin(), list.end());

  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  std::vector<int> parent_edge(static_cast<std::size_t>(n), -1);
  std::vector<int> depth(static_cast<std::size_t>(n), -1);
  std::vector<char> in_tree(static_cast<std::size_t>(m), 0);
  std::vector<int> tree_edges;
  tree_edges.reserve(static_cast<std::size_t>(n - 1));

  std::deque<int> queue;
  depth[0] = 0;
  queue.push_back(0);
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (const auto& [w, e] : inc[static_cast<std::size_t>(v)]) {
      if (depth[static_cast<std::size_t>(w)] < 0) {
        depth[static_cast<std::size_t>(w)] = depth[static_cast<std::size_t>(v)] + 1;
        parent[static_cast<std::size_t>(w)] = v;
        parent_edge[static_cast<std::size_t>(w)] = e;
        in_tree[static_cast<std::size_t>(e)] = 1;
        tree_edges.push_back(e);
        queue.push_back(w);
      }
    }
  }
  if (static_cast<int>(tree_edges.size()) != n - 1) {
    throw DisconnectedGraph("spanning tree requires a connected graph");
  }

  TreeCycleDecomposition dec;
  dec.n = n;
  dec.m = m;
  dec.c = m - n + 1;

  dec.edge_order = tree_edges;
  for (int e = 0; e < m; ++e) {
    if (!in_tree[static_cast<std::size_t>(e)]) dec.edge_order.push_back(e);
  }
  dec.edges.reserve(static_cast<std::size_t>(m));
  for (int pos = 0; pos < m; ++pos) {
    dec.edges.push_back(
        edges[static_cast<std::size_t>(dec.edge_order[static_cast<std::size_t>(pos)])]);
  }

  // Position of a tree edge in the reordered basis.
  std::vector<int> tree_pos(static_cast<std::size_t>(m), -1);
  for (int pos = 0; pos < n - 1; ++pos) {
    tree_pos[static_cast<std::size_t>(dec.edge_order[static_cast<std::size_t>(pos)])] =
        pos;
  }

  dec.H = Eigen::MatrixXi::Zero(m, n);
  for (int pos = 0; pos < m; ++pos) {
    const Edge& e = dec.edges[static_cast<std::size_t>(pos)];
    dec.H(pos, e.head) = 1;
    dec.H(pos, e.tail) = -1;
  }
  dec.H_tilde = dec.H.topRows(n - 1);

  dec.Q = Eigen::MatrixXi::Zero(dec.c, n - 1);
  dec.C1.resize(n - 1);
  for (int pos = 0; pos < n - 1; ++pos) {
    dec.C1(pos) = dec.edges[static_cast<std::size_t>(pos)].conductance;
  }
  dec.C2.resize(dec.c);

  dec.fundamental_cycles.resize(static_cast<std::size_t>(dec.c));
  for (int k = 0; k < dec.c; ++k) {
    const int chord_pos = n - 1 + k;
    const Edge& chord = dec.edges[static_cast<std::size_t>(chord_pos)];
    dec.C2(k) = chord.conductance;

    auto& cycle = dec.fundamental_cycles[static_cast<std::size_t>(k)];
    cycle.push_back({chord_pos, +1});

    // Close the cycle through the tree from the chord head back to its tail.
    // Climb both endpoints to their common ancestor; tree edges traversed
    // against their own orientation get sign -1.
    int u = chord.head;
    int v = chord.tail;
    std::vector<std::pair<int, int>> down_part;
    while (u != v) {
      if (depth[static_cast<std::size_t>(u)] >= depth[static_cast<std::size_t>(v)]) {
        const int e = parent_edge[static_cast<std::size_t>(u)];
        const Edge& te = edges[static_cast<std::size_t>(e)];
        const int sign = (te.tail == u) ? +1 : -1;  // travel u -> parent(u)
        const int pos = tree_pos[static_cast<std::size_t>(e)];
        cycle.push_back({pos, sign});
        dec.Q(k, pos) = sign;
        u = parent[static_cast<std::size_t>(u)];
      } else {
        const int e = parent_edge[static_cast<std::size_t>(v)];
        const Edge& te = edges[static_cast<std::size_t>(e)];
        const int sign = (te.tail == parent[static_cast<std::size_t>(v)]) ? +1 : -1;
        const int pos = tree_pos[static_cast<std::size_t>(e)];
        down_part.push_back({pos, sign});  // travel parent(v) -> v
        dec.Q(k, pos) = sign;
        v = parent[static_cast<std::size_t>(v)];
      }
    }
    cycle.insert(cycle.end(), down_part.rbegin(), down_part.rend());
  }

  return dec;
}

Eigen::MatrixXd cycle_laplacian(const TreeCycleDecomposition& dec) {
  if (dec.c == 0) {
    throw EmptyCycleSpace("cycle Laplacian of a graph with corank 0");
  }
  return (dec.Q * dec.Q.transpose()).cast<double>();
}

CycleStats cycle_stats(const TreeCycleDecomposition& dec) {
  CycleStats stats;
  stats.lengths.reserve(static_cast<std::size_t>(dec.c));
  for (const auto& cycle : dec.fundamental_cycles) {
    stats.lengths.push_back(static_cast<int>(cycle.size()));
  }
  if (dec.n > 1) {
    double excess = 0.0;
    for (int len : stats.lengths) excess += len - 1;
    stats.mu = excess / (dec.n - 1);
  }
  // Pairwise shared-edge counts via the cycles' unsigned edge sets.
  std::vector<std::set<int>> edge_sets;
  edge_sets.reserve(static_cast<std::size_t>(dec.c));
  for (const auto& cycle : dec.fundamental_cycles) {
    std::set<int> s;
    for (const auto& [pos, sign] : cycle) s.insert(pos);
    edge_sets.push_back(std::move(s));
  }
  for (int k = 0; k < dec.c; ++k) {
    double total = stats.lengths[static_cast<std::size_t>(k)];
    for (int l = 0; l < dec.c; ++l) {
      if (l == k) continue;
      int shared = 0;
      for (int pos : edge_sets[static_cast<std::size_t>(k)]) {
        shared += edge_sets[static_cast<std::size_t>(l)].count(pos);
      }
      if (shared > 0) stats.disjoint = false;
      total += shared;
    }
    stats.delta = std::max(stats.delta, total);
  }
  return stats;
}

}  // namespace conlab
