#pragma once

#include <cstdint>

#include "iads/graph.hpp"

namespace iads {

struct GenerationConfig {
	int n = 50;              // node count
	int k = 4;               // even ring-lattice degree, k < n
	double beta = 0.5;       // rewiring probability
	double unit_km = 20.0;   // base edge length L0
	int mult_max = 9;        // lengths are unit_km * {1..mult_max}
	double asset_exponent = 1.5;
	std::uint64_t seed = 0;
};

struct SmallWorldness {
	double omega = 0.0;
	double c_observed = 0.0;
	double c_lattice = 0.0;
	double l_observed = 0.0;
	double l_random = 0.0;
};

/// Watts-Strogatz topology with integer-multiple edge lengths and
/// power-law asset values. Pure function of the config; retries with a
/// fresh substream until connected.
/// Throws ConfigError on a bad config, NumericError after 100 failed
/// connectivity retries.
WeightedLocationNetwork generate(const GenerationConfig& config);

/// Telesford-style omega on the unweighted topology:
/// l_random / l_observed - c_observed / c_lattice. The random reference
/// averages `samples` connected G(n, m) draws from a seeded substream.
/// Throws ConfigError("lattice clustering undefined") when the matched
/// lattice has zero clustering (k = 2).
SmallWorldness small_worldness(const WeightedLocationNetwork& net,
                               int samples, std::uint64_t seed);

/// Mean local clustering coefficient of the unweighted topology.
double mean_clustering(const WeightedLocationNetwork& net);

/// Mean unweighted shortest-path length over ordered pairs.
double mean_hop_length(const WeightedLocationNetwork& net);

} // namespace iads
