#include "conlab/generators.hpp"

#include <set>
#include <utility>
#include <vector>

#include "conlab/errors.hpp"
#include "conlab/rng.hpp"

namespace conlab {

OrientedNetwork path_graph(int n) {
  if (n < 2) throw InvalidArgument("path_graph: need n >= 2");
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 1.0});
  return OrientedNetwork(n, edges, /*directed=*/false);
}

OrientedNetwork complete_graph(int n) {
  if (n < 2) throw InvalidArgument("complete_graph: need n >= 2");
  std::vector<Edge> edges;
  edges.reserve(n * (n - 1) / 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j, 1.0});
  return OrientedNetwork(n, edges, /*directed=*/false);
}

OrientedNetwork star_graph(int n) {
  if (n < 2) throw InvalidArgument("star_graph: need n >= 2");
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (int i = 1; i < n; ++i) edges.push_back({0, i, 1.0});
  return OrientedNetwork(n, edges, /*directed=*/false);
}

OrientedNetwork cycle_power_graph(int n, int d) {
  if (n < 3) throw InvalidArgument("cycle_power_graph: need n >= 3");
  if (d < 2 || d % 2 != 0) {
    throw InvalidArgument("cycle_power_graph: degree must be even, >= 2");
  }
  if (d >= n) {
    throw InvalidArgument("cycle_power_graph: degree must be below n");
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) * (d / 2));
  for (int k = 1; k <= d / 2; ++k) {
    for (int i = 0; i < n; ++i) {
      edges.push_back({i, (i + k) % n, 1.0});
    }
  }
  return OrientedNetwork(n, edges, /*directed=*/false);
}

OrientedNetwork random_bipartite_permutation(int m, int d,
                                             std::uint64_t seed) {
  if (m < 2) throw InvalidArgument("random_bipartite_permutation: need m >= 2");
  if (d < 1) throw InvalidArgument("random_bipartite_permutation: need d >= 1");
  RandomStream rs(seed);
  std::set<std::pair<int, int>> seen;
  std::vector<Edge> edges;
  for (int round = 0; round < d; ++round) {
    const std::vector<int> p = rs.permutation(m);
    for (int i = 0; i < m; ++i) {
      if (seen.insert({i, m + p[i]}).second) {
        edges.push_back({i, m + p[i], 1.0});
      }
    }
  }
  return OrientedNetwork(2 * m, edges, /*directed=*/false);
}

Eigen::MatrixXd noncooperative_demo_matrix() {
  Eigen::MatrixXd d(5, 5);
  d << -1.0251,  2.2043, -1.6032,  0.5044, -0.0804,
       -0.1264,  0.2772, -0.3006,  0.2060, -0.0562,
       -1.1549,  2.5819, -1.9613,  0.5210,  0.0133,
       -0.8807,  1.9231, -1.0823,  0.0333,  0.0066,
       -0.9049,  1.8778, -1.0060,  0.3772, -0.3441;
  return d;
}

OrientedNetwork noncooperative_demo_network() {
  const Eigen::MatrixXd d = noncooperative_demo_matrix();
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) {
      if (i == j || d(i, j) == 0.0) continue;
      edges.push_back({i, j, d(i, j)});
    }
  }
  return OrientedNetwork(5, edges, /*directed=*/true);
}

}  // namespace conlab
