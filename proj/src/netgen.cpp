#include "iads/netgen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <set>
#include <utility>
#include <vector>

#include "iads/errors.hpp"

namespace iads {

namespace {

// Deterministic 64-bit generator with explicit derivations so results are
// identical across standard library implementations.
struct Rng {
	std::uint64_t state;

	explicit Rng(std::uint64_t seed) : state(seed) {}

	std::uint64_t next() {
		// splitmix64
		std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
		z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
		z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
		return z ^ (z >> 31);
	}

	double uniform01() { return (next() >> 11) * 0x1.0p-53; }

	// Uniform in [lo, hi], both inclusive.
	int uniform_int(int lo, int hi) {
		auto span = static_cast<std::uint64_t>(hi - lo + 1);
		return lo + static_cast<int>(next() % span);
	}
};

std::uint64_t substream(std::uint64_t seed, std::uint64_t stream) {
	Rng mix(seed ^ (0xa0761d6478bd642fULL * (stream + 1)));
	return mix.next();
}

using EdgeSet = std::set<std::pair<NodeId, NodeId>>;

std::pair<NodeId, NodeId> norm_pair(NodeId a, NodeId b) {
	return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

// Ring lattice plus per-edge rewiring with probability beta; edge count is
// preserved.
EdgeSet watts_strogatz_topology(int n, int k, double beta, Rng& rng) {
	EdgeSet edges;
	for (NodeId i = 0; i < n; ++i) {
		for (int j = 1; j <= k / 2; ++j) {
			edges.insert(norm_pair(i, (i + j) % n));
		}
	}
	for (int j = 1; j <= k / 2; ++j) {
		for (NodeId i = 0; i < n; ++i) {
			if (rng.uniform01() >= beta) continue;
			NodeId old = (i + j) % n;
			if (!edges.count(norm_pair(i, old))) continue;
			// Degree-saturated nodes cannot be rewired anywhere new.
			int deg = 0;
			for (const auto& e : edges) {
				if (e.first == i || e.second == i) ++deg;
			}
			if (deg >= n - 1) continue;
			NodeId target;
			do {
				target = rng.uniform_int(0, n - 1);
			} while (target == i || edges.count(norm_pair(i, target)));
			edges.erase(norm_pair(i, old));
			edges.insert(norm_pair(i, target));
		}
	}
	return edges;
}

bool edge_set_connected(int n, const EdgeSet& edges) {
	std::vector<std::vector<NodeId>> adj(static_cast<size_t>(n));
	for (const auto& [a, b] : edges) {
		adj[static_cast<size_t>(a)].push_back(b);
		adj[static_cast<size_t>(b)].push_back(a);
	}
	std::vector<bool> seen(static_cast<size_t>(n), false);
	std::queue<NodeId> q;
	q.push(0);
	seen[0] = true;
	int reached = 1;
	while (!q.empty()) {
		NodeId u = q.front();
		q.pop();
		for (NodeId v : adj[static_cast<size_t>(u)]) {
			if (!seen[static_cast<size_t>(v)]) {
				seen[static_cast<size_t>(v)] = true;
				++reached;
				q.push(v);
			}
		}
	}
	return reached == n;
}

// Inverse-CDF draw of the density proportional to x^(-alpha) on [1, 10].
double power_law_sample(double alpha, double u) {
	if (std::abs(alpha - 1.0) < 1e-12) {
		return std::pow(10.0, u);
	}
	double e = 1.0 - alpha;
	return std::pow(1.0 + u * (std::pow(10.0, e) - 1.0), 1.0 / e);
}

// Unweighted adjacency of the network topology.
std::vector<std::vector<NodeId>> topology_adjacency(
    const WeightedLocationNetwork& net) {
	std::vector<std::vector<NodeId>> adj(static_cast<size_t>(net.node_count()));
	for (const Edge& e : net.edges()) {
		adj[static_cast<size_t>(e.u)].push_back(e.v);
		adj[static_cast<size_t>(e.v)].push_back(e.u);
	}
	for (auto& a : adj) std::sort(a.begin(), a.end());
	return adj;
}

double mean_clustering_of(int n, const std::vector<std::vector<NodeId>>& adj) {
	std::vector<std::set<NodeId>> nb(static_cast<size_t>(n));
	for (NodeId v = 0; v < n; ++v) {
		nb[static_cast<size_t>(v)] =
		    std::set<NodeId>(adj[static_cast<size_t>(v)].begin(),
		                     adj[static_cast<size_t>(v)].end());
	}
	double total = 0.0;
	for (NodeId v = 0; v < n; ++v) {
		const auto& a = adj[static_cast<size_t>(v)];
		size_t deg = a.size();
		if (deg < 2) continue; // contributes zero
		int links = 0;
		for (size_t i = 0; i < deg; ++i) {
			for (size_t j = i + 1; j < deg; ++j) {
				if (nb[static_cast<size_t>(a[i])].count(a[j])) ++links;
			}
		}
		total += 2.0 * links / (static_cast<double>(deg) * (deg - 1));
	}
	return total / n;
}

double mean_hops_of(int n, const std::vector<std::vector<NodeId>>& adj,
                    bool* connected = nullptr) {
	double total = 0.0;
	long pairs = 0;
	if (connected) *connected = true;
	for (NodeId s = 0; s < n; ++s) {
		std::vector<int> dist(static_cast<size_t>(n), -1);
		std::queue<NodeId> q;
		q.push(s);
		dist[static_cast<size_t>(s)] = 0;
		while (!q.empty()) {
			NodeId u = q.front();
			q.pop();
			for (NodeId v : adj[static_cast<size_t>(u)]) {
				if (dist[static_cast<size_t>(v)] < 0) {
					dist[static_cast<size_t>(v)] = dist[static_cast<size_t>(u)] + 1;
					q.push(v);
				}
			}
		}
		for (NodeId t = 0; t < n; ++t) {
			if (t == s) continue;
			if (dist[static_cast<size_t>(t)] < 0) {
				if (connected) *connected = false;
				continue;
			}
			total += dist[static_cast<size_t>(t)];
			++pairs;
		}
	}
	return pairs > 0 ? total / pairs : 0.0;
}

std::vector<std::vector<NodeId>> ring_lattice_adjacency(int n, int k) {
	std::vector<std::vector<NodeId>> adj(static_cast<size_t>(n));
	EdgeSet edges;
	for (NodeId i = 0; i < n; ++i) {
		for (int j = 1; j <= k / 2; ++j) {
			edges.insert(norm_pair(i, (i + j) % n));
		}
	}
	for (const auto& [a, b] : edges) {
		adj[static_cast<size_t>(a)].push_back(b);
		adj[static_cast<size_t>(b)].push_back(a);
	}
	return adj;
}

// Uniform G(n, m) draw.
std::vector<std::vector<NodeId>> random_gnm_adjacency(int n, long m, Rng& rng) {
	EdgeSet edges;
	while (static_cast<long>(edges.size()) < m) {
		NodeId a = rng.uniform_int(0, n - 1);
		NodeId b = rng.uniform_int(0, n - 1);
		if (a == b) continue;
		edges.insert(norm_pair(a, b));
	}
	std::vector<std::vector<NodeId>> adj(static_cast<size_t>(n));
	for (const auto& [a, b] : edges) {
		adj[static_cast<size_t>(a)].push_back(b);
		adj[static_cast<size_t>(b)].push_back(a);
	}
	return adj;
}

} // namespace

WeightedLocationNetwork generate(const GenerationConfig& config) {
	if (config.k % 2 != 0 || config.k < 2 || config.k >= config.n) {
		throw ConfigError("ring-lattice degree must be even and in [2, n)");
	}
	if (config.beta < 0.0 || config.beta > 1.0) {
		throw ConfigError("rewiring probability must be in [0, 1]");
	}
	if (!(config.unit_km > 0.0) || config.mult_max < 1) {
		throw ConfigError("edge length parameters must be positive");
	}
	if (!(config.asset_exponent > 0.0)) {
		throw ConfigError("asset exponent must be positive");
	}

	constexpr int kMaxRetries = 100;
	EdgeSet topology;
	bool connected = false;
	for (int attempt = 0; attempt < kMaxRetries && !connected; ++attempt) {
		Rng rng(substream(config.seed, static_cast<std::uint64_t>(attempt)));
		topology = watts_strogatz_topology(config.n, config.k, config.beta, rng);
		connected = edge_set_connected(config.n, topology);
	}
	if (!connected) {
		throw NumericError("connected topology not reached in 100 retries");
	}

	Rng length_rng(substream(config.seed, 1000));
	std::vector<Edge> edges;
	edges.reserve(topology.size());
	for (const auto& [a, b] : topology) {
		double km = config.unit_km * length_rng.uniform_int(1, config.mult_max);
		edges.push_back({a, b, km});
	}

	// Stratified power-law draw: each asset is marginally x^(-alpha) on
	// [1, 10] discretized to tenths, while one network's total concentrates
	// the way the observed 50-node totals do.
	Rng asset_rng(substream(config.seed, 2000));
	const int n = config.n;
	std::vector<int> strata(static_cast<size_t>(n));
	std::iota(strata.begin(), strata.end(), 0);
	for (int i = n - 1; i > 0; --i) {
		std::swap(strata[static_cast<size_t>(i)],
		          strata[static_cast<size_t>(asset_rng.uniform_int(0, i))]);
	}
	std::vector<double> assets(static_cast<size_t>(n));
	for (int i = 0; i < n; ++i) {
		double u = (strata[static_cast<size_t>(i)] + asset_rng.uniform01()) / n;
		double x = power_law_sample(config.asset_exponent, u);
		assets[static_cast<size_t>(i)] =
		    std::clamp(std::round(x) / 10.0, 0.1, 1.0);
	}

	return WeightedLocationNetwork(config.n, std::move(assets), std::move(edges));
}

double mean_clustering(const WeightedLocationNetwork& net) {
	return mean_clustering_of(net.node_count(), topology_adjacency(net));
}

double mean_hop_length(const WeightedLocationNetwork& net) {
	return mean_hops_of(net.node_count(), topology_adjacency(net));
}

SmallWorldness small_worldness(const WeightedLocationNetwork& net, int samples,
                               std::uint64_t seed) {
	const int n = net.node_count();
	const long m = static_cast<long>(net.edges().size());
	auto adj = topology_adjacency(net);

	SmallWorldness sw;
	sw.c_observed = mean_clustering_of(n, adj);
	sw.l_observed = mean_hops_of(n, adj);

	// Lattice reference: ring lattice with the nearest even degree.
	double mean_degree = 2.0 * m / n;
	int k = static_cast<int>(std::lround(mean_degree / 2.0)) * 2;
	k = std::clamp(k, 2, n % 2 == 0 ? n - 2 : n - 1);
	sw.c_lattice = mean_clustering_of(n, ring_lattice_adjacency(n, k));
	if (sw.c_lattice <= 0.0) {
		throw ConfigError("lattice clustering undefined");
	}

	// Random reference: mean path length over connected G(n, m) samples.
	Rng rng(substream(seed, 3000));
	double total = 0.0;
	int used = 0;
	int draws = 0;
	while (used < samples && draws < samples * 50) {
		++draws;
		auto random_adj = random_gnm_adjacency(n, m, rng);
		bool connected = false;
		double l = mean_hops_of(n, random_adj, &connected);
		if (!connected) continue;
		total += l;
		++used;
	}
	if (used == 0) {
		throw NumericError("no connected random reference samples");
	}
	sw.l_random = total / used;

	sw.omega = sw.l_random / sw.l_observed - sw.c_observed / sw.c_lattice;
	return sw;
}

} // namespace iads
