#pragma once

#include <set>
#include <utility>
#include <vector>

#include <conlab/conlab.hpp>

namespace testsupport {

// Random tree plus `chords` extra edges, all unit conductance.
inline conlab::OrientedNetwork random_connected_graph(conlab::RandomStream& rs,
                                                      int n, int chords) {
  std::vector<conlab::Edge> edges;
  std::set<std::pair<int, int>> seen;
  for (int v = 1; v < n; ++v) {
    const int p = static_cast<int>(rs.uniform_below(v));
    edges.push_back({p, v, 1.0});
    seen.insert({p, v});
  }
  int placed = 0;
  int attempts = 0;
  while (placed < chords && attempts < 50 * (chords + 1)) {
    ++attempts;
    const int a = static_cast<int>(rs.uniform_below(n));
    const int b = static_cast<int>(rs.uniform_below(n));
    if (a == b) continue;
    const std::pair<int, int> key{std::min(a, b), std::max(a, b)};
    if (!seen.insert(key).second) continue;
    edges.push_back({key.first, key.second, 1.0});
    ++placed;
  }
  return conlab::OrientedNetwork(n, edges, false);
}

// Dense random coupling with zero row sums, entries O(1).
inline Eigen::MatrixXd random_coupling(conlab::RandomStream& rs, int n) {
  Eigen::MatrixXd g(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) g(i, j) = rs.normal();
  }
  const Eigen::VectorXd row_sums = g.rowwise().sum();
  g.diagonal() -= row_sums;
  return g;
}

inline double rel_err(double value, double reference) {
  return std::abs(value - reference) / std::max(1e-300, std::abs(reference));
}

}  // namespace testsupport
