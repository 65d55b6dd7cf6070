#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "conlab/errors.hpp"

namespace conlab {

struct Edge {
  int tail = 0;
  int head = 0;
  double conductance = 1.0;
};

/**
 * Weighted oriented graph on vertices {0, ..., n-1}.
 *
 * Undirected networks keep one canonical orientation per edge (tail < head)
 * and the conductance acts symmetrically; directed networks keep edges as
 * given, and opposite arcs between the same pair are allowed.  Conductances
 * may be negative.  Self loops and duplicate edges are rejected.
 */
class OrientedNetwork {
 public:
  OrientedNetwork(int n, std::vector<Edge> edges, bool directed);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  bool directed() const { return directed_; }
  const std::vector<Edge>& edges() const { return edges_; }

  bool unit_conductances() const;

  // Conductance matrix A; symmetric for undirected networks.  A directed
  // edge (i, j, c) means agent i couples to the state of agent j: A(i,j)=c.
  Eigen::MatrixXd conductance_matrix() const;

  // Coupling matrix D = A - diag(A*ones); always annihilates the ones vector.
  Eigen::MatrixXd coupling_matrix() const;

  // Neighbor lists of the underlying undirected simple graph, each sorted
  // ascending; parallel arcs collapse to one neighbor entry.
  std::vector<std::vector<int>> neighbor_lists() const;

  bool is_connected() const;

  // Diameter of the underlying undirected graph (unit edge lengths).
  // Throws DisconnectedGraph when unreachable pairs exist.
  int diameter() const;

  // Common unweighted degree if the underlying graph is regular, else -1.
  int regular_degree() const;

 private:
  int n_;
  bool directed_;
  std::vector<Edge> edges_;
};

/**
 * Spanning-tree split of the edge set with the fundamental-cycle basis.
 *
 * Edges are reordered tree-first: positions 0..n-2 hold the spanning tree
 * (BFS from vertex 0, neighbors scanned in ascending id order), positions
 * n-1..m-1 hold the chords.  Each chord closes exactly one fundamental
 * cycle, oriented so the chord is traversed along its own orientation.
 */
struct TreeCycleDecomposition {
  int n = 0;
  int m = 0;
  int c = 0;                    // corank m - n + 1
  std::vector<Edge> edges;      // reordered, tree edges first
  std::vector<int> edge_order;  // reordered position -> original edge index
  Eigen::MatrixXi H;            // m x n coboundary in the reordered basis
  Eigen::MatrixXi H_tilde;      // (n-1) x n coboundary of the spanning tree
  Eigen::MatrixXi Q;            // c x (n-1); H = [I; -Q] H_tilde exactly
  // Cycle k as a signed edge set: pairs (position in `edges`, sign).
  std::vector<std::vector<std::pair<int, int>>> fundamental_cycles;
  Eigen::VectorXd C1;  // tree conductances, length n-1
  Eigen::VectorXd C2;  // chord conductances, length c
};

struct CycleStats {
  double mu = 0.0;     // mean excess cycle length, sum(|O_k|-1)/(n-1)
  double delta = 0.0;  // max over k of |O_k| + sum_{l != k} |O_k ∩ O_l|
  std::vector<int> lengths;
  bool disjoint = true;  // pairwise edge-disjoint fundamental cycles
};

// Signed edge-vertex incidence in the stored edge order: row e carries +1 at
// the head and -1 at the tail; H^T C H is the weighted Laplacian.
Eigen::MatrixXi coboundary(const OrientedNetwork& net);

TreeCycleDecomposition spanning_tree_decomposition(const OrientedNetwork& net);

// Cycle Laplacian Q Q^T (c x c); diagonal |O_i|-1, off-diagonal ±|O_i ∩ O_j|.
Eigen::MatrixXd cycle_laplacian(const TreeCycleDecomposition& dec);

CycleStats cycle_stats(const TreeCycleDecomposition& dec);

}  // namespace conlab
