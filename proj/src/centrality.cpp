#include "iads/centrality.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>
#include <sstream>

#include "iads/errors.hpp"

namespace iads {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Dijkstra with shortest-path counting. Fills distance, path counts and
// predecessor lists, and returns nodes in settling order.
struct SsspCounts {
	std::vector<double> dist;
	std::vector<double> sigma;
	std::vector<std::vector<NodeId>> preds;
	std::vector<NodeId> order;
};

SsspCounts counted_sssp(const WeightedLocationNetwork& net, NodeId source) {
	const int n = net.node_count();
	SsspCounts r;
	r.dist.assign(static_cast<size_t>(n), kInf);
	r.sigma.assign(static_cast<size_t>(n), 0.0);
	r.preds.assign(static_cast<size_t>(n), {});
	std::vector<bool> settled(static_cast<size_t>(n), false);
	using Item = std::pair<double, NodeId>;
	std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
	r.dist[static_cast<size_t>(source)] = 0.0;
	r.sigma[static_cast<size_t>(source)] = 1.0;
	pq.emplace(0.0, source);
	while (!pq.empty()) {
		auto [d, u] = pq.top();
		pq.pop();
		if (settled[static_cast<size_t>(u)]) continue;
		settled[static_cast<size_t>(u)] = true;
		r.order.push_back(u);
		for (const auto& [v, km] : net.neighbors(u)) {
			const auto vi = static_cast<size_t>(v);
			double nd = r.dist[static_cast<size_t>(u)] + km;
			if (nd < r.dist[vi] - kDistanceEps) {
				r.dist[vi] = nd;
				r.sigma[vi] = r.sigma[static_cast<size_t>(u)];
				r.preds[vi] = {u};
				pq.emplace(nd, v);
			} else if (std::abs(nd - r.dist[vi]) <= kDistanceEps && !settled[vi]) {
				r.sigma[vi] += r.sigma[static_cast<size_t>(u)];
				r.preds[vi].push_back(u);
			}
		}
	}
	return r;
}

double pair_norm(int n) {
	return n > 2 ? static_cast<double>(n - 1) * (n - 2) : 1.0;
}

} // namespace

ScoreVector betweenness(const WeightedLocationNetwork& net,
                        const DistanceMatrix& dm) {
	(void)dm;
	const int n = net.node_count();
	ScoreVector bc(static_cast<size_t>(n), 0.0);
	for (NodeId s = 0; s < n; ++s) {
		auto sp = counted_sssp(net, s);
		std::vector<double> delta(static_cast<size_t>(n), 0.0);
		for (auto it = sp.order.rbegin(); it != sp.order.rend(); ++it) {
			NodeId w = *it;
			for (NodeId u : sp.preds[static_cast<size_t>(w)]) {
				delta[static_cast<size_t>(u)] +=
				    sp.sigma[static_cast<size_t>(u)] / sp.sigma[static_cast<size_t>(w)] *
				    (1.0 + delta[static_cast<size_t>(w)]);
			}
			if (w != s) bc[static_cast<size_t>(w)] += delta[static_cast<size_t>(w)];
		}
	}
	for (double& x : bc) x /= pair_norm(n);
	return bc;
}

ScoreVector closeness(const WeightedLocationNetwork& net,
                      const DistanceMatrix& dm) {
	const int n = net.node_count();
	ScoreVector scores(static_cast<size_t>(n), 0.0);
	for (NodeId v = 0; v < n; ++v) {
		double total = 0.0;
		for (NodeId u = 0; u < n; ++u) total += dm.at(v, u);
		scores[static_cast<size_t>(v)] = total > 0.0 ? (n - 1) / total : 0.0;
	}
	if (n == 1) scores[0] = 0.0;
	return scores;
}

ScoreVector link_rank(const WeightedLocationNetwork& net, double damping,
                      double tol, int max_iter) {
	const int n = net.node_count();
	if (n == 1) return {1.0};
	std::vector<double> strength(static_cast<size_t>(n), 0.0);
	for (NodeId v = 0; v < n; ++v) strength[static_cast<size_t>(v)] = net.strength(v);
	ScoreVector x(static_cast<size_t>(n), 1.0 / n);
	ScoreVector next(static_cast<size_t>(n), 0.0);
	for (int iter = 0; iter < max_iter; ++iter) {
		std::fill(next.begin(), next.end(), (1.0 - damping) / n);
		for (NodeId u = 0; u < n; ++u) {
			double share = damping * x[static_cast<size_t>(u)] /
			               strength[static_cast<size_t>(u)];
			for (const auto& [v, km] : net.neighbors(u)) {
				next[static_cast<size_t>(v)] += share * km;
			}
		}
		double residual = 0.0;
		for (int i = 0; i < n; ++i) {
			residual += std::abs(next[static_cast<size_t>(i)] - x[static_cast<size_t>(i)]);
		}
		x.swap(next);
		if (residual < tol) return x;
	}
	std::ostringstream msg;
	msg << "link_rank did not converge after " << max_iter << " iterations";
	throw NumericError(msg.str());
}

ScoreVector eigenvector(const WeightedLocationNetwork& net, double tol,
                        int max_iter) {
	const int n = net.node_count();
	if (n == 1) return {1.0};
	ScoreVector x(static_cast<size_t>(n), 1.0 / std::sqrt(static_cast<double>(n)));
	ScoreVector next(static_cast<size_t>(n), 0.0);
	// Iterate on A + sI with s a Gershgorin bound; the shift keeps the
	// eigenvectors but breaks the +/-lambda oscillation of bipartite graphs.
	double shift = 0.0;
	for (NodeId v = 0; v < n; ++v) shift = std::max(shift, net.strength(v));
	for (int iter = 0; iter < max_iter; ++iter) {
		for (int i = 0; i < n; ++i) {
			next[static_cast<size_t>(i)] = shift * x[static_cast<size_t>(i)];
		}
		for (NodeId u = 0; u < n; ++u) {
			for (const auto& [v, km] : net.neighbors(u)) {
				next[static_cast<size_t>(v)] += km * x[static_cast<size_t>(u)];
			}
		}
		double norm = std::sqrt(
		    std::inner_product(next.begin(), next.end(), next.begin(), 0.0));
		if (norm == 0.0) throw NumericError("eigenvector iteration collapsed");
		double residual = 0.0;
		for (int i = 0; i < n; ++i) {
			next[static_cast<size_t>(i)] /= norm;
			residual = std::max(residual, std::abs(next[static_cast<size_t>(i)] -
			                                       x[static_cast<size_t>(i)]));
		}
		x.swap(next);
		if (residual < tol) return x;
	}
	std::ostringstream msg;
	msg << "eigenvector iteration did not converge after " << max_iter
	    << " iterations";
	throw NumericError(msg.str());
}

ScoreVector load(const WeightedLocationNetwork& net, const DistanceMatrix& dm) {
	(void)dm;
	const int n = net.node_count();
	ScoreVector scores(static_cast<size_t>(n), 0.0);
	for (NodeId s = 0; s < n; ++s) {
		auto sp = counted_sssp(net, s);
		// One unit of demand per node; cascade from farthest back toward the
		// source, splitting equally among tied predecessors.
		std::vector<double> amount(static_cast<size_t>(n), 1.0);
		amount[static_cast<size_t>(s)] = 0.0;
		for (auto it = sp.order.rbegin(); it != sp.order.rend(); ++it) {
			NodeId w = *it;
			if (w == s) continue;
			const auto& preds = sp.preds[static_cast<size_t>(w)];
			double share = amount[static_cast<size_t>(w)] / preds.size();
			for (NodeId u : preds) amount[static_cast<size_t>(u)] += share;
			// Flow received from farther nodes transits through w.
			scores[static_cast<size_t>(w)] += amount[static_cast<size_t>(w)] - 1.0;
		}
	}
	for (double& x : scores) x /= pair_norm(n);
	return scores;
}

ScoreVector degree(const WeightedLocationNetwork& net) {
	const int n = net.node_count();
	ScoreVector scores(static_cast<size_t>(n), 0.0);
	if (n == 1) return scores;
	for (NodeId v = 0; v < n; ++v) {
		scores[static_cast<size_t>(v)] = static_cast<double>(net.degree(v)) / (n - 1);
	}
	return scores;
}

std::vector<NodeId> rank_sequence(const ScoreVector& scores) {
	std::vector<NodeId> order(scores.size());
	std::iota(order.begin(), order.end(), 0);
	std::sort(order.begin(), order.end(), [&scores](NodeId a, NodeId b) {
		double sa = scores[static_cast<size_t>(a)];
		double sb = scores[static_cast<size_t>(b)];
		if (sa != sb) return sa > sb;
		return a < b;
	});
	return order;
}

} // namespace iads
