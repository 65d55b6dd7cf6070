#pragma once

#include <cstdint>

#include <Eigen/Dense>

#include "conlab/graph.hpp"

namespace conlab {

// Unit-conductance path 1-2-...-n.
OrientedNetwork path_graph(int n);

// Unit-conductance complete graph on n vertices.
OrientedNetwork complete_graph(int n);

// Unit-conductance star with vertex 0 at the center.
OrientedNetwork star_graph(int n);

/**
 * d-th power of the n-cycle: vertex i is joined to i +- 1, ..., i +- d/2
 * modulo n.  The degree d must be even (each offset contributes two
 * neighbours) and smaller than n.  The result is d-regular.
 */
OrientedNetwork cycle_power_graph(int n, int d);

/**
 * Random bipartite d-regular multigraph on parts of size m, built from d
 * independent uniform permutations: round k joins left vertex i to right
 * vertex m + p_k(i).  Parallel edges produced by coinciding permutations
 * are collapsed, so the result is simple with degrees at most d.
 */
OrientedNetwork random_bipartite_permutation(int m, int d,
                                             std::uint64_t seed);

// A fixed 5-vertex coupling matrix with mixed-sign weights whose
// off-consensus dynamics are stable even though the interactions are not
// cooperative.  Row sums vanish, the spectrum is real, and the matrix is
// far from normal.
Eigen::MatrixXd noncooperative_demo_matrix();

// The same example as a directed network: one edge per off-diagonal entry,
// so coupling_matrix() reproduces the demo matrix up to roundoff.
OrientedNetwork noncooperative_demo_network();

}  // namespace conlab
