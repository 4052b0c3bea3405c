#pragma once

#include <array>
#include <vector>

#include "iads/centrality.hpp"
#include "iads/coverage.hpp"
#include "iads/graph.hpp"

namespace iads {

// The six candidate streams, in the fixed evaluation order used for
// tie-breaking: betweenness, closeness, link_rank, eigenvector, load,
// degree.
inline constexpr int kSequenceCount = 6;

struct RankSequences {
	std::array<ScoreVector, kSequenceCount> scores;
	std::array<std::vector<NodeId>, kSequenceCount> order;
};

RankSequences compute_rank_sequences(const WeightedLocationNetwork& net,
                                     const DistanceMatrix& dm);

struct CandidateEval {
	NodeId node = 0;
	double unprotected_after = 0.0;
	int sequence = -1; // 0-based sequence index, -1 for pool candidates
};

struct BatteryDecision {
	std::vector<CandidateEval> candidates;
	NodeId chosen = 0;
	double range_km = 0.0;
	double unprotected_after = 0.0;
	bool exhaustive = false; // placed by the uncovered-node fallback
};

struct StrategyResult {
	int strategy_id = 0; // 1..7, 0 for the exhaustive oracle
	Placement placement;
	CoverageReport report;
	std::vector<BatteryDecision> trace;
};

StrategyResult strategy_1(const WeightedLocationNetwork& net,
                          const DistanceMatrix& dm, const BatteryInventory& inv);
StrategyResult strategy_2(const WeightedLocationNetwork& net,
                          const DistanceMatrix& dm, const BatteryInventory& inv);
StrategyResult strategy_3(const WeightedLocationNetwork& net,
                          const DistanceMatrix& dm, const BatteryInventory& inv);
StrategyResult strategy_4(const WeightedLocationNetwork& net,
                          const DistanceMatrix& dm, const BatteryInventory& inv);
StrategyResult strategy_5(const WeightedLocationNetwork& net,
                          const DistanceMatrix& dm, const BatteryInventory& inv);
StrategyResult strategy_6(const WeightedLocationNetwork& net,
                          const DistanceMatrix& dm, const BatteryInventory& inv);
StrategyResult strategy_7(const WeightedLocationNetwork& net,
                          const DistanceMatrix& dm, const BatteryInventory& inv);

/// Exact minimum-U placement by enumerating all ordered assignments of the
/// inventory ranges to distinct nodes; ties go to the lexicographically
/// smallest node tuple. Throws ConfigError("oracle bound exceeded") when
/// the enumeration would exceed 1e7 assignments.
StrategyResult exhaustive_optimal(const WeightedLocationNetwork& net,
                                  const DistanceMatrix& dm,
                                  const BatteryInventory& inv);

/// Strategies 1..7 on identical inputs, in order.
std::vector<StrategyResult> run_all(const WeightedLocationNetwork& net,
                                    const DistanceMatrix& dm,
                                    const BatteryInventory& inv);

StrategyResult run_strategy(int strategy_id, const WeightedLocationNetwork& net,
                            const DistanceMatrix& dm,
                            const BatteryInventory& inv);

} // namespace iads
