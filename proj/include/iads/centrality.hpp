#pragma once

#include <vector>

#include "iads/graph.hpp"

namespace iads {

using ScoreVector = std::vector<double>;

/// Shortest-path betweenness over km costs, normalized by (n-1)(n-2).
ScoreVector betweenness(const WeightedLocationNetwork& net,
                        const DistanceMatrix& dm);

/// (n-1) / sum of distances, per node.
ScoreVector closeness(const WeightedLocationNetwork& net,
                      const DistanceMatrix& dm);

/// Stationary vector of the damped km-weighted random walk; sums to 1.
/// Throws NumericError if the iteration fails to converge.
ScoreVector link_rank(const WeightedLocationNetwork& net,
                      double damping = 0.85, double tol = 1e-9,
                      int max_iter = 200);

/// Dominant eigenvector of the km-weighted adjacency matrix, unit 2-norm.
/// Throws NumericError if power iteration fails to converge.
ScoreVector eigenvector(const WeightedLocationNetwork& net, double tol = 1e-10,
                        int max_iter = 20000);

/// Newman load: unit flow per ordered pair, split equally at tied branches;
/// transiting flow normalized by (n-1)(n-2).
ScoreVector load(const WeightedLocationNetwork& net, const DistanceMatrix& dm);

/// Unweighted degree fraction deg(v) / (n-1).
ScoreVector degree(const WeightedLocationNetwork& net);

/// Nodes by descending score; ties broken by ascending node id.
std::vector<NodeId> rank_sequence(const ScoreVector& scores);

} // namespace iads
