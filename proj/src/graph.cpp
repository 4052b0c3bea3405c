#include "iads/graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>
#include <set>

#include "iads/errors.hpp"

namespace iads {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

} // namespace

WeightedLocationNetwork::WeightedLocationNetwork(int node_count,
                                                 std::vector<double> asset_values,
                                                 std::vector<Edge> edges)
    : node_count_(node_count),
      assets_(std::move(asset_values)),
      edges_(std::move(edges)) {
	if (node_count_ <= 0) {
		throw ConfigError("node count must be positive");
	}
	if (static_cast<int>(assets_.size()) != node_count_) {
		throw ConfigError("asset list does not match node count");
	}
	for (double a : assets_) {
		if (!(a >= 0.0 && a <= 1.0)) {
			throw ConfigError("asset value outside [0, 1]");
		}
	}
	adjacency_.assign(static_cast<size_t>(node_count_), {});
	std::set<std::pair<NodeId, NodeId>> seen;
	for (const Edge& e : edges_) {
		if (e.u < 0 || e.u >= node_count_ || e.v < 0 || e.v >= node_count_) {
			throw ConfigError("edge endpoint out of range");
		}
		if (e.u == e.v) {
			throw ConfigError("self-loop edge");
		}
		if (!(e.km > 0.0)) {
			throw ConfigError("edge length must be positive");
		}
		auto key = std::minmax(e.u, e.v);
		if (!seen.insert(key).second) {
			throw ConfigError("duplicate edge");
		}
		adjacency_[static_cast<size_t>(e.u)].emplace_back(e.v, e.km);
		adjacency_[static_cast<size_t>(e.v)].emplace_back(e.u, e.km);
	}
	for (auto& adj : adjacency_) {
		std::sort(adj.begin(), adj.end());
	}
	total_asset_ = std::accumulate(assets_.begin(), assets_.end(), 0.0);
}

double WeightedLocationNetwork::strength(NodeId v) const {
	double s = 0.0;
	for (const auto& [w, km] : neighbors(v)) {
		(void)w;
		s += km;
	}
	return s;
}

bool WeightedLocationNetwork::has_edge(NodeId u, NodeId v) const {
	const auto& adj = neighbors(u);
	return std::any_of(adj.begin(), adj.end(),
	                   [v](const auto& e) { return e.first == v; });
}

bool WeightedLocationNetwork::is_connected() const {
	std::vector<bool> seen(static_cast<size_t>(node_count_), false);
	std::queue<NodeId> frontier;
	frontier.push(0);
	seen[0] = true;
	int reached = 1;
	while (!frontier.empty()) {
		NodeId u = frontier.front();
		frontier.pop();
		for (const auto& [v, km] : neighbors(u)) {
			(void)km;
			if (!seen[static_cast<size_t>(v)]) {
				seen[static_cast<size_t>(v)] = true;
				++reached;
				frontier.push(v);
			}
		}
	}
	return reached == node_count_;
}

std::vector<double> dijkstra(const WeightedLocationNetwork& net, NodeId source) {
	const int n = net.node_count();
	std::vector<double> dist(static_cast<size_t>(n), kInf);
	std::vector<bool> settled(static_cast<size_t>(n), false);
	using Item = std::pair<double, NodeId>;
	std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
	dist[static_cast<size_t>(source)] = 0.0;
	pq.emplace(0.0, source);
	while (!pq.empty()) {
		auto [d, u] = pq.top();
		pq.pop();
		if (settled[static_cast<size_t>(u)]) continue;
		settled[static_cast<size_t>(u)] = true;
		for (const auto& [v, km] : net.neighbors(u)) {
			double nd = d + km;
			if (nd < dist[static_cast<size_t>(v)]) {
				dist[static_cast<size_t>(v)] = nd;
				pq.emplace(nd, v);
			}
		}
	}
	return dist;
}

DistanceMatrix all_pairs_shortest_paths(const WeightedLocationNetwork& net) {
	if (!net.is_connected()) {
		throw ConfigError("graph not connected");
	}
	const int n = net.node_count();
	DistanceMatrix dm(n);
	for (NodeId s = 0; s < n; ++s) {
		auto dist = dijkstra(net, s);
		for (NodeId t = 0; t < n; ++t) {
			dm.at(s, t) = dist[static_cast<size_t>(t)];
		}
	}
	return dm;
}

DiameterResult diameter(const DistanceMatrix& dm) {
	const int n = dm.node_count();
	DiameterResult best{0.0, 0, 0};
	for (NodeId u = 0; u < n; ++u) {
		for (NodeId v = u + 1; v < n; ++v) {
			if (dm.at(u, v) > best.km + kDistanceEps) {
				best = {dm.at(u, v), u, v};
			}
		}
	}
	if (n == 1) best = {0.0, 0, 0};
	return best;
}

PathResult shortest_path(const WeightedLocationNetwork& net, NodeId u, NodeId v) {
	if (u < 0 || u >= net.node_count() || v < 0 || v >= net.node_count()) {
		throw ConfigError("path endpoint out of range");
	}
	if (u == v) {
		return PathResult{{u}, 0.0};
	}
	// Walk greedily toward v along edges consistent with the distance-to-v
	// field; choosing the smallest admissible neighbor at every step yields
	// the lexicographically smallest minimal path.
	auto dist_to_v = dijkstra(net, v);
	if (std::isinf(dist_to_v[static_cast<size_t>(u)])) {
		throw ConfigError("graph not connected");
	}
	PathResult result;
	result.nodes.push_back(u);
	NodeId cur = u;
	while (cur != v) {
		NodeId next = -1;
		double step = 0.0;
		for (const auto& [w, km] : net.neighbors(cur)) {
			if (std::abs(km + dist_to_v[static_cast<size_t>(w)] -
			             dist_to_v[static_cast<size_t>(cur)]) <= kDistanceEps) {
				next = w;
				step = km;
				break; // neighbors are id-sorted; first admissible is smallest
			}
		}
		if (next < 0) {
			throw NumericError("shortest-path reconstruction failed");
		}
		result.nodes.push_back(next);
		result.total_km += step;
		cur = next;
	}
	return result;
}

PathResult farthest_node_path(const WeightedLocationNetwork& net,
                              const DistanceMatrix& dm, NodeId v) {
	const int n = dm.node_count();
	NodeId farthest = 0;
	double best = -1.0;
	for (NodeId u = 0; u < n; ++u) {
		if (dm.at(v, u) > best + kDistanceEps) {
			best = dm.at(v, u);
			farthest = u;
		}
	}
	return shortest_path(net, v, farthest);
}

} // namespace iads
