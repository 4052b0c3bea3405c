#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "iads/errors.hpp"
#include "iads/graph.hpp"
#include "oracles.hpp"

using namespace iads;

namespace {

WeightedLocationNetwork path_abc() {
	// A-B 50 km, B-C 60 km
	return WeightedLocationNetwork(3, {0.5, 0.5, 0.5},
	                               {{0, 1, 50.0}, {1, 2, 60.0}});
}

WeightedLocationNetwork triangle() {
	// AB=3, BC=4, AC=10
	return WeightedLocationNetwork(3, {0.1, 0.2, 0.3},
	                               {{0, 1, 3.0}, {1, 2, 4.0}, {0, 2, 10.0}});
}

} // namespace

TEST_CASE("network construction validates input") {
	CHECK_THROWS_AS(WeightedLocationNetwork(2, {0.5, 1.5}, {{0, 1, 1.0}}),
	                ConfigError);
	CHECK_THROWS_AS(WeightedLocationNetwork(2, {0.5, 0.5}, {{0, 0, 1.0}}),
	                ConfigError);
	CHECK_THROWS_AS(WeightedLocationNetwork(2, {0.5, 0.5}, {{0, 1, -1.0}}),
	                ConfigError);
	CHECK_THROWS_AS(
	    WeightedLocationNetwork(2, {0.5, 0.5}, {{0, 1, 1.0}, {1, 0, 2.0}}),
	    ConfigError);
}

TEST_CASE("all_pairs_shortest_paths on the path graph") {
	auto dm = all_pairs_shortest_paths(path_abc());
	CHECK(dm.at(0, 2) == doctest::Approx(110.0));
	CHECK(dm.at(0, 1) == doctest::Approx(50.0));
	CHECK(dm.at(0, 0) == 0.0);
}

TEST_CASE("all_pairs_shortest_paths takes the indirect route") {
	auto dm = all_pairs_shortest_paths(triangle());
	CHECK(dm.at(0, 2) == doctest::Approx(7.0));
}

TEST_CASE("single node gives the 1x1 zero matrix") {
	WeightedLocationNetwork net(1, {0.5}, {});
	auto dm = all_pairs_shortest_paths(net);
	CHECK(dm.node_count() == 1);
	CHECK(dm.at(0, 0) == 0.0);
}

TEST_CASE("disconnected input is rejected") {
	WeightedLocationNetwork net(4, {0.1, 0.1, 0.1, 0.1},
	                            {{0, 1, 1.0}, {2, 3, 1.0}});
	CHECK_THROWS_WITH_AS(all_pairs_shortest_paths(net), "graph not connected",
	                     ConfigError);
}

TEST_CASE("diameter picks the max pair with lexicographic ties") {
	auto dm = all_pairs_shortest_paths(path_abc());
	auto d = diameter(dm);
	CHECK(d.km == doctest::Approx(110.0));
	CHECK(d.source == 0);
	CHECK(d.target == 2);

	WeightedLocationNetwork complete(
	    4, {0.1, 0.1, 0.1, 0.1},
	    {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {1, 2, 1}, {1, 3, 1}, {2, 3, 1}});
	auto dc = diameter(all_pairs_shortest_paths(complete));
	CHECK(dc.km == doctest::Approx(1.0));
	CHECK(dc.source == 0);
	CHECK(dc.target == 1);

	auto dt = diameter(all_pairs_shortest_paths(triangle()));
	CHECK(dt.km == doctest::Approx(7.0));
	CHECK(dt.source == 0);
	CHECK(dt.target == 2);
}

TEST_CASE("shortest_path routes and tie-breaks deterministically") {
	auto net = triangle();
	auto p = shortest_path(net, 0, 2);
	CHECK(p.nodes == std::vector<NodeId>{0, 1, 2});
	CHECK(p.total_km == doctest::Approx(7.0));

	auto self = shortest_path(net, 1, 1);
	CHECK(self.nodes == std::vector<NodeId>{1});
	CHECK(self.total_km == 0.0);

	auto abc = shortest_path(path_abc(), 0, 2);
	CHECK(abc.nodes == std::vector<NodeId>{0, 1, 2});
	CHECK(abc.total_km == doctest::Approx(110.0));

	// Two equal-length routes 0-1-3 and 0-2-3: lexicographic pick goes via 1.
	WeightedLocationNetwork tied(
	    4, {0.1, 0.1, 0.1, 0.1},
	    {{0, 1, 1.0}, {1, 3, 1.0}, {0, 2, 1.0}, {2, 3, 1.0}});
	auto tp = shortest_path(tied, 0, 3);
	CHECK(tp.nodes == std::vector<NodeId>{0, 1, 3});
}

TEST_CASE("farthest_node_path") {
	auto net = path_abc();
	auto dm = all_pairs_shortest_paths(net);
	auto p = farthest_node_path(net, dm, 1);
	CHECK(p.nodes == std::vector<NodeId>{1, 2});
	CHECK(p.total_km == doctest::Approx(60.0));

	WeightedLocationNetwork complete(
	    3, {0.1, 0.1, 0.1}, {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}});
	auto pc = farthest_node_path(complete, all_pairs_shortest_paths(complete), 0);
	CHECK(pc.nodes == std::vector<NodeId>{0, 1}); // tie goes to the lowest id

	WeightedLocationNetwork star(4, {0.1, 0.1, 0.1, 0.1},
	                             {{0, 1, 5.0}, {0, 2, 7.0}, {0, 3, 9.0}});
	auto ps = farthest_node_path(star, all_pairs_shortest_paths(star), 0);
	CHECK(ps.nodes == std::vector<NodeId>{0, 3});
	CHECK(ps.total_km == doctest::Approx(9.0));
}

TEST_CASE("distance matrix matches the simple-path enumeration oracle") {
	for (std::uint64_t seed = 0; seed < 100; ++seed) {
		int n = 2 + static_cast<int>(seed % 7);
		auto net = oracles::random_connected_graph(n, seed * 7919 + 1);
		auto dm = all_pairs_shortest_paths(net);
		auto brute = oracles::brute_force_apsp(net);
		for (NodeId u = 0; u < n; ++u) {
			for (NodeId v = 0; v < n; ++v) {
				CHECK(dm.at(u, v) ==
				      doctest::Approx(brute[static_cast<size_t>(u)][static_cast<size_t>(v)])
				          .epsilon(1e-9));
			}
		}
	}
}

TEST_CASE("distance matrix symmetry, triangle inequality, path consistency") {
	for (std::uint64_t seed = 0; seed < 25; ++seed) {
		int n = 3 + static_cast<int>(seed % 6);
		auto net = oracles::random_connected_graph(n, seed * 33 + 5);
		auto dm = all_pairs_shortest_paths(net);
		for (NodeId u = 0; u < n; ++u) {
			CHECK(dm.at(u, u) == 0.0);
			for (NodeId v = 0; v < n; ++v) {
				CHECK(dm.at(u, v) == dm.at(v, u));
				for (NodeId w = 0; w < n; ++w) {
					CHECK(dm.at(u, w) <= dm.at(u, v) + dm.at(v, w) + 1e-9);
				}
				auto p = shortest_path(net, u, v);
				CHECK(p.total_km == doctest::Approx(dm.at(u, v)).epsilon(1e-12));
				CHECK(p.nodes.front() == u);
				CHECK(p.nodes.back() == v);
				// consecutive nodes share an edge
				for (size_t i = 1; i < p.nodes.size(); ++i) {
					CHECK(net.has_edge(p.nodes[i - 1], p.nodes[i]));
				}
			}
		}
		for (const Edge& e : net.edges()) {
			CHECK(dm.at(e.u, e.v) <= e.km + 1e-12);
		}
	}
}
