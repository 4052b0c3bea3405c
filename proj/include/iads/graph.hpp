#pragma once

#include <cstdint>
#include <tuple>
#include <utility>
#include <vector>

namespace iads {

using NodeId = int;

struct Edge {
	NodeId u = 0;
	NodeId v = 0;
	double km = 0.0;
};

/**
 * Undirected connected location network. Nodes carry asset scores in
 * [0, 1], edges carry trajectory lengths in km. Immutable after
 * construction; at most one edge per unordered pair.
 */
class WeightedLocationNetwork {
public:
	WeightedLocationNetwork(int node_count, std::vector<double> asset_values,
	                        std::vector<Edge> edges);

	int node_count() const { return node_count_; }
	double asset(NodeId v) const { return assets_[static_cast<size_t>(v)]; }
	const std::vector<double>& assets() const { return assets_; }
	double total_asset() const { return total_asset_; }

	const std::vector<Edge>& edges() const { return edges_; }
	// Neighbors sorted by node id, with the incident edge length.
	const std::vector<std::pair<NodeId, double>>& neighbors(NodeId v) const {
		return adjacency_[static_cast<size_t>(v)];
	}
	int degree(NodeId v) const {
		return static_cast<int>(adjacency_[static_cast<size_t>(v)].size());
	}
	// Sum of incident edge lengths.
	double strength(NodeId v) const;

	bool has_edge(NodeId u, NodeId v) const;
	bool is_connected() const;

private:
	int node_count_;
	std::vector<double> assets_;
	double total_asset_;
	std::vector<Edge> edges_;
	std::vector<std::vector<std::pair<NodeId, double>>> adjacency_;
};

/// All-pairs trajectory distances in km, symmetric with zero diagonal.
class DistanceMatrix {
public:
	DistanceMatrix() = default;
	explicit DistanceMatrix(int node_count)
	    : n_(node_count),
	      d_(static_cast<size_t>(node_count) * node_count, 0.0) {}

	int node_count() const { return n_; }
	double at(NodeId u, NodeId v) const {
		return d_[static_cast<size_t>(u) * n_ + v];
	}
	double& at(NodeId u, NodeId v) { return d_[static_cast<size_t>(u) * n_ + v]; }

private:
	int n_ = 0;
	std::vector<double> d_;
};

struct PathResult {
	std::vector<NodeId> nodes;
	double total_km = 0.0;
};

struct DiameterResult {
	double km = 0.0;
	NodeId source = 0;
	NodeId target = 0;
};

// Distance comparisons tolerate this much absolute error in km.
inline constexpr double kDistanceEps = 1e-9;

/// Single-source shortest-path distances (nonnegative weights).
std::vector<double> dijkstra(const WeightedLocationNetwork& net, NodeId source);

/// Throws ConfigError("graph not connected") on disconnected input.
DistanceMatrix all_pairs_shortest_paths(const WeightedLocationNetwork& net);

/// Max-distance pair; ties resolved to the lexicographically smallest (u, v).
DiameterResult diameter(const DistanceMatrix& dm);

/// Minimum-length path; among ties, the lexicographically smallest node
/// sequence.
PathResult shortest_path(const WeightedLocationNetwork& net, NodeId u, NodeId v);

/// Shortest path from v to its farthest node (ties to the lowest node id).
PathResult farthest_node_path(const WeightedLocationNetwork& net,
                              const DistanceMatrix& dm, NodeId v);

} // namespace iads
