#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "iads/coverage.hpp"
#include "iads/graph.hpp"
#include "iads/netgen.hpp"
#include "iads/strategies.hpp"

namespace iads {

/// Sidecar metadata attached to generated networks.
struct NetworkMeta {
	std::uint64_t seed = 0;
	int k = 0;
	double beta = 0.0;
	double unit_km = 0.0;
	int mult_max = 0;
	double omega = 0.0;
};

/// Canonical interchange schema:
/// {"nodes":[{"id":0,"asset":0.3},...],"edges":[{"u":0,"v":5,"km":41.0},...]}
nlohmann::json network_to_json(const WeightedLocationNetwork& net,
                               const std::optional<NetworkMeta>& meta = std::nullopt);

WeightedLocationNetwork network_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const CoverageReport& report,
                              const Placement& placement);

/// One record per battery: candidates with their U values, chosen node.
nlohmann::json trace_to_json(const StrategyResult& result);

WeightedLocationNetwork load_network_file(const std::string& path);
void save_json_file(const std::string& path, const nlohmann::json& j);

} // namespace iads
