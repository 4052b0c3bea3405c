#pragma once

#include <vector>

#include "iads/graph.hpp"

namespace iads {

/// Interceptor ranges in km, sorted descending, plus the intercept
/// probability p shared by every interceptor.
struct BatteryInventory {
	std::vector<double> ranges_km;
	double intercept_prob = 0.98;

	BatteryInventory() = default;
	BatteryInventory(std::vector<double> ranges, double p);

	size_t size() const { return ranges_km.size(); }
	double sum_ranges() const;
};

struct Battery {
	NodeId node = 0;
	double range_km = 0.0;
};

/// Battery-to-node assignment. Nodes are pairwise distinct and ranges are
/// a prefix of the inventory in order.
struct Placement {
	std::vector<Battery> batteries;

	bool contains(NodeId v) const;
	std::vector<NodeId> nodes() const;
};

struct CoverageReport {
	std::vector<NodeId> covered;   // sorted ascending
	double unprotected_value = 0.0;
	double total_value = 0.0;
	double worst_case_pct = 0.0;
};

/// Nodes within trajectory range of some battery (inclusive radius).
std::vector<NodeId> covered_nodes(const DistanceMatrix& dm,
                                  const Placement& placement);

/// Per-node coverage mask; the hot inner loop of every strategy.
std::vector<bool> covered_mask(const DistanceMatrix& dm,
                               const Placement& placement);

/// Uncovered asset sum given a coverage mask.
double unprotected_value(const WeightedLocationNetwork& net,
                         const std::vector<bool>& mask);

/// Expected worst-case damage percentage: protected assets still leak
/// (1 - p) because one interceptor faces one attacker missile.
double worst_case_pct(double unprotected, double total, double p);

/// Full coverage accounting for one placement.
/// Throws ConfigError("network has no assets") when the total is zero.
CoverageReport evaluate(const WeightedLocationNetwork& net,
                        const DistanceMatrix& dm, const Placement& placement,
                        double p);

} // namespace iads
