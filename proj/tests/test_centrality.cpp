#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "iads/centrality.hpp"
#include "iads/graph.hpp"
#include "oracles.hpp"

using namespace iads;

namespace {

WeightedLocationNetwork star5() {
	// hub 0, four leaves, equal lengths
	return WeightedLocationNetwork(
	    5, {0.5, 0.5, 0.5, 0.5, 0.5},
	    {{0, 1, 10}, {0, 2, 10}, {0, 3, 10}, {0, 4, 10}});
}

WeightedLocationNetwork path4() {
	return WeightedLocationNetwork(4, {0.5, 0.5, 0.5, 0.5},
	                               {{0, 1, 10}, {1, 2, 10}, {2, 3, 10}});
}

WeightedLocationNetwork complete4() {
	return WeightedLocationNetwork(
	    4, {0.5, 0.5, 0.5, 0.5},
	    {{0, 1, 10}, {0, 2, 10}, {0, 3, 10}, {1, 2, 10}, {1, 3, 10}, {2, 3, 10}});
}

} // namespace

TEST_CASE("betweenness on the star") {
	auto net = star5();
	auto dm = all_pairs_shortest_paths(net);
	auto bc = betweenness(net, dm);
	CHECK(bc[0] == doctest::Approx(1.0));
	for (int v = 1; v < 5; ++v) CHECK(bc[static_cast<size_t>(v)] == doctest::Approx(0.0));
}

TEST_CASE("betweenness on the path") {
	auto net = path4();
	auto dm = all_pairs_shortest_paths(net);
	auto bc = betweenness(net, dm);
	// middle nodes each carry 2 of the 6 ordered non-endpoint pairs... the
	// classic values: 2/3 each for a 4-path under (n-1)(n-2) normalization
	CHECK(bc[0] == doctest::Approx(0.0));
	CHECK(bc[1] == doctest::Approx(4.0 / 6.0));
	CHECK(bc[2] == doctest::Approx(4.0 / 6.0));
	CHECK(bc[3] == doctest::Approx(0.0));
}

TEST_CASE("closeness on the path") {
	auto net = path4();
	auto dm = all_pairs_shortest_paths(net);
	auto cc = closeness(net, dm);
	CHECK(cc[0] == doctest::Approx(3.0 / 60.0));
	CHECK(cc[1] == doctest::Approx(3.0 / 40.0));
	CHECK(cc[2] == doctest::Approx(3.0 / 40.0));
	CHECK(cc[3] == doctest::Approx(3.0 / 60.0));
}

TEST_CASE("degree fractions") {
	auto d = degree(star5());
	CHECK(d[0] == doctest::Approx(1.0));
	CHECK(d[1] == doctest::Approx(0.25));
	auto dk = degree(complete4());
	for (double x : dk) CHECK(x == doctest::Approx(1.0));
}

TEST_CASE("link_rank sums to one and is uniform on symmetric graphs") {
	auto lr = link_rank(complete4());
	double sum = 0.0;
	for (double x : lr) sum += x;
	CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
	for (double x : lr) CHECK(x == doctest::Approx(0.25).epsilon(1e-8));
}

TEST_CASE("eigenvector has unit 2-norm and ranks the hub first") {
	auto ev = eigenvector(star5());
	double norm = 0.0;
	for (double x : ev) norm += x * x;
	CHECK(std::sqrt(norm) == doctest::Approx(1.0).epsilon(1e-9));
	for (int v = 1; v < 5; ++v) CHECK(ev[0] > ev[static_cast<size_t>(v)]);
	// star dominant eigenvector: hub = 1/sqrt(2), leaves = 1/sqrt(8)
	CHECK(ev[0] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-8));
	CHECK(ev[1] == doctest::Approx(1.0 / std::sqrt(8.0)).epsilon(1e-8));
}

TEST_CASE("load equals betweenness on trees") {
	for (std::uint64_t seed = 0; seed < 20; ++seed) {
		oracles::TestRng rng(seed * 101 + 3);
		int n = 3 + static_cast<int>(seed % 6);
		std::vector<Edge> edges;
		for (NodeId v = 1; v < n; ++v) {
			edges.push_back({rng.uniform_int(0, v - 1), v, 0.5 * rng.uniform_int(1, 20)});
		}
		std::vector<double> assets(static_cast<size_t>(n), 0.5);
		WeightedLocationNetwork net(n, std::move(assets), std::move(edges));
		auto dm = all_pairs_shortest_paths(net);
		auto bc = betweenness(net, dm);
		auto ld = load(net, dm);
		for (int v = 0; v < n; ++v) {
			CHECK(ld[static_cast<size_t>(v)] ==
			      doctest::Approx(bc[static_cast<size_t>(v)]).epsilon(1e-10));
		}
	}
}

TEST_CASE("load splits flow at tied branches") {
	// 0-1-3 and 0-2-3 equal length; 1 and 2 each transit half a unit per
	// direction of the 0<->3 demand.
	WeightedLocationNetwork net(
	    4, {0.5, 0.5, 0.5, 0.5},
	    {{0, 1, 10}, {1, 3, 10}, {0, 2, 10}, {2, 3, 10}});
	auto dm = all_pairs_shortest_paths(net);
	auto ld = load(net, dm);
	CHECK(ld[1] == doctest::Approx(1.0 / 6.0));
	CHECK(ld[2] == doctest::Approx(1.0 / 6.0));
}

TEST_CASE("all six measures match dense oracles on random graphs") {
	for (std::uint64_t seed = 0; seed < 60; ++seed) {
		int n = 3 + static_cast<int>(seed % 6);
		auto net = oracles::random_connected_graph(n, seed * 523 + 11);
		auto dm = all_pairs_shortest_paths(net);

		auto bc = betweenness(net, dm);
		auto bc_ref = oracles::brute_force_betweenness(net);
		auto ld = load(net, dm);
		auto ld_ref = oracles::brute_force_load(net);
		auto lr = link_rank(net);
		auto lr_ref = oracles::dense_link_rank(net);
		auto ev = eigenvector(net);
		auto ev_ref = oracles::dense_eigenvector(net);
		for (int v = 0; v < n; ++v) {
			auto i = static_cast<size_t>(v);
			CHECK(std::abs(bc[i] - bc_ref[i]) <= 1e-9);
			CHECK(std::abs(ld[i] - ld_ref[i]) <= 1e-9);
			CHECK(std::abs(lr[i] - lr_ref[i]) <= 1e-8);
			CHECK(std::abs(ev[i] - ev_ref[i]) <= 1e-6);
		}
	}
}

TEST_CASE("scores are invariant under node relabeling") {
	auto net = oracles::random_connected_graph(7, 4242);
	const int n = net.node_count();
	// reverse relabeling: new id = n-1-old
	std::vector<Edge> edges;
	for (const Edge& e : net.edges()) {
		NodeId u = n - 1 - e.u, v = n - 1 - e.v;
		edges.push_back({std::min(u, v), std::max(u, v), e.km});
	}
	std::vector<double> assets(static_cast<size_t>(n));
	for (int v = 0; v < n; ++v) assets[static_cast<size_t>(n - 1 - v)] = net.asset(v);
	WeightedLocationNetwork relabeled(n, std::move(assets), std::move(edges));

	auto dm1 = all_pairs_shortest_paths(net);
	auto dm2 = all_pairs_shortest_paths(relabeled);
	auto check_pair = [&](const ScoreVector& a, const ScoreVector& b, double tol) {
		for (int v = 0; v < n; ++v) {
			CHECK(std::abs(a[static_cast<size_t>(v)] -
			               b[static_cast<size_t>(n - 1 - v)]) <= tol);
		}
	};
	check_pair(betweenness(net, dm1), betweenness(relabeled, dm2), 1e-12);
	check_pair(closeness(net, dm1), closeness(relabeled, dm2), 1e-12);
	check_pair(load(net, dm1), load(relabeled, dm2), 1e-12);
	check_pair(degree(net), degree(relabeled), 0.0);
	check_pair(link_rank(net), link_rank(relabeled), 1e-9);
	check_pair(eigenvector(net), eigenvector(relabeled), 1e-8);
}

TEST_CASE("distance-based scores are stable under uniform km scaling") {
	auto net = oracles::random_connected_graph(6, 99);
	const int n = net.node_count();
	std::vector<Edge> scaled_edges;
	for (const Edge& e : net.edges()) scaled_edges.push_back({e.u, e.v, e.km * 3.0});
	std::vector<double> assets;
	for (int v = 0; v < n; ++v) assets.push_back(net.asset(v));
	WeightedLocationNetwork scaled(n, std::move(assets), std::move(scaled_edges));

	auto dm1 = all_pairs_shortest_paths(net);
	auto dm2 = all_pairs_shortest_paths(scaled);
	auto bc1 = betweenness(net, dm1);
	auto bc2 = betweenness(scaled, dm2);
	auto ld1 = load(net, dm1);
	auto ld2 = load(scaled, dm2);
	auto lr1 = link_rank(net);
	auto lr2 = link_rank(scaled);
	auto ev1 = eigenvector(net);
	auto ev2 = eigenvector(scaled);
	for (int v = 0; v < n; ++v) {
		auto i = static_cast<size_t>(v);
		CHECK(std::abs(bc1[i] - bc2[i]) <= 1e-12);
		CHECK(std::abs(ld1[i] - ld2[i]) <= 1e-12);
		CHECK(std::abs(lr1[i] - lr2[i]) <= 1e-9);  // walk shares are scale-free
		CHECK(std::abs(ev1[i] - ev2[i]) <= 1e-8);  // unit norm removes the scale
	}
}

TEST_CASE("rank_sequence orders by score then id") {
	CHECK(rank_sequence({0.2, 0.9, 0.2}) == std::vector<NodeId>{1, 0, 2});
	CHECK(rank_sequence({1.0}) == std::vector<NodeId>{0});
	CHECK(rank_sequence({0.5, 0.5, 0.5}) == std::vector<NodeId>{0, 1, 2});
	CHECK(rank_sequence({0.1, 0.3, 0.2, 0.3}) == std::vector<NodeId>{1, 3, 2, 0});
}
