#include "iads/json_io.hpp"

#include <fstream>

#include "iads/errors.hpp"

namespace iads {

using nlohmann::json;

json network_to_json(const WeightedLocationNetwork& net,
                     const std::optional<NetworkMeta>& meta) {
	json nodes = json::array();
	for (NodeId v = 0; v < net.node_count(); ++v) {
		nodes.push_back({{"id", v}, {"asset", net.asset(v)}});
	}
	json edges = json::array();
	for (const Edge& e : net.edges()) {
		edges.push_back({{"u", e.u}, {"v", e.v}, {"km", e.km}});
	}
	json j{{"nodes", std::move(nodes)}, {"edges", std::move(edges)}};
	if (meta) {
		j["meta"] = {{"seed", meta->seed},       {"k", meta->k},
		             {"beta", meta->beta},       {"unit_km", meta->unit_km},
		             {"mult_max", meta->mult_max}, {"omega", meta->omega}};
	}
	return j;
}

WeightedLocationNetwork network_from_json(const json& j) {
	if (!j.contains("nodes") || !j.contains("edges")) {
		throw ConfigError("network JSON needs 'nodes' and 'edges'");
	}
	const auto& jnodes = j.at("nodes");
	std::vector<double> assets(jnodes.size(), 0.0);
	for (const auto& node : jnodes) {
		int id = node.at("id").get<int>();
		if (id < 0 || id >= static_cast<int>(jnodes.size())) {
			throw ConfigError("node ids must be 0-based and contiguous");
		}
		assets[static_cast<size_t>(id)] = node.at("asset").get<double>();
	}
	std::vector<Edge> edges;
	for (const auto& edge : j.at("edges")) {
		edges.push_back({edge.at("u").get<int>(), edge.at("v").get<int>(),
		                 edge.at("km").get<double>()});
	}
	return WeightedLocationNetwork(static_cast<int>(jnodes.size()),
	                               std::move(assets), std::move(edges));
}

json report_to_json(const CoverageReport& report, const Placement& placement) {
	json batteries = json::array();
	for (const Battery& b : placement.batteries) {
		batteries.push_back({{"node", b.node}, {"range_km", b.range_km}});
	}
	return json{{"placement", std::move(batteries)},
	            {"covered", report.covered},
	            {"unprotected_value", report.unprotected_value},
	            {"total_value", report.total_value},
	            {"worst_case_pct", report.worst_case_pct}};
}

json trace_to_json(const StrategyResult& result) {
	json steps = json::array();
	for (const BatteryDecision& d : result.trace) {
		json candidates = json::array();
		for (const CandidateEval& c : d.candidates) {
			candidates.push_back({{"node", c.node},
			                      {"unprotected_after", c.unprotected_after},
			                      {"sequence", c.sequence}});
		}
		steps.push_back({{"candidates", std::move(candidates)},
		                 {"chosen", d.chosen},
		                 {"range_km", d.range_km},
		                 {"unprotected_after", d.unprotected_after},
		                 {"exhaustive", d.exhaustive}});
	}
	return json{{"strategy_id", result.strategy_id},
	            {"steps", std::move(steps)},
	            {"report", report_to_json(result.report, result.placement)}};
}

WeightedLocationNetwork load_network_file(const std::string& path) {
	std::ifstream in(path);
	if (!in) {
		throw ConfigError("cannot open network file: " + path);
	}
	json j;
	in >> j;
	return network_from_json(j);
}

void save_json_file(const std::string& path, const json& j) {
	std::ofstream out(path);
	if (!out) {
		throw ConfigError("cannot write file: " + path);
	}
	out << j.dump(2) << '\n';
}

} // namespace iads
