#include "iads/coverage.hpp"

#include <algorithm>

#include "iads/errors.hpp"

namespace iads {

BatteryInventory::BatteryInventory(std::vector<double> ranges, double p)
    : ranges_km(std::move(ranges)), intercept_prob(p) {
	if (ranges_km.empty()) {
		throw ConfigError("battery inventory is empty");
	}
	for (double r : ranges_km) {
		if (!(r > 0.0)) throw ConfigError("interceptor range must be positive");
	}
	if (!std::is_sorted(ranges_km.begin(), ranges_km.end(), std::greater<>())) {
		throw ConfigError("interceptor ranges must be sorted descending");
	}
	if (!(p > 0.0 && p <= 1.0)) {
		throw ConfigError("intercept probability must be in (0, 1]");
	}
}

double BatteryInventory::sum_ranges() const {
	double s = 0.0;
	for (double r : ranges_km) s += r;
	return s;
}

bool Placement::contains(NodeId v) const {
	return std::any_of(batteries.begin(), batteries.end(),
	                   [v](const Battery& b) { return b.node == v; });
}

std::vector<NodeId> Placement::nodes() const {
	std::vector<NodeId> out;
	out.reserve(batteries.size());
	for (const Battery& b : batteries) out.push_back(b.node);
	return out;
}

std::vector<bool> covered_mask(const DistanceMatrix& dm,
                               const Placement& placement) {
	const int n = dm.node_count();
	std::vector<bool> mask(static_cast<size_t>(n), false);
	for (const Battery& b : placement.batteries) {
		for (NodeId u = 0; u < n; ++u) {
			if (dm.at(u, b.node) <= b.range_km + kDistanceEps) {
				mask[static_cast<size_t>(u)] = true;
			}
		}
	}
	return mask;
}

std::vector<NodeId> covered_nodes(const DistanceMatrix& dm,
                                  const Placement& placement) {
	auto mask = covered_mask(dm, placement);
	std::vector<NodeId> out;
	for (NodeId u = 0; u < dm.node_count(); ++u) {
		if (mask[static_cast<size_t>(u)]) out.push_back(u);
	}
	return out;
}

double unprotected_value(const WeightedLocationNetwork& net,
                         const std::vector<bool>& mask) {
	double u = 0.0;
	for (NodeId v = 0; v < net.node_count(); ++v) {
		if (!mask[static_cast<size_t>(v)]) u += net.asset(v);
	}
	return u;
}

double worst_case_pct(double unprotected, double total, double p) {
	// Unprotected assets are lost outright; protected assets leak (1 - p).
	return 100.0 * (unprotected + (1.0 - p) * (total - unprotected)) / total;
}

CoverageReport evaluate(const WeightedLocationNetwork& net,
                        const DistanceMatrix& dm, const Placement& placement,
                        double p) {
	if (!(net.total_asset() > 0.0)) {
		throw ConfigError("network has no assets");
	}
	CoverageReport report;
	auto mask = covered_mask(dm, placement);
	report.covered = covered_nodes(dm, placement);
	report.unprotected_value = unprotected_value(net, mask);
	report.total_value = net.total_asset();
	report.worst_case_pct =
	    worst_case_pct(report.unprotected_value, report.total_value, p);
	return report;
}

} // namespace iads
