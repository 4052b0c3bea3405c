#include "iads/strategies.hpp"

#include <algorithm>
#include <limits>

#include "iads/errors.hpp"

namespace iads {

namespace {

struct Ctx {
	const WeightedLocationNetwork& net;
	const DistanceMatrix& dm;
	const BatteryInventory& inv;

	int batteries() const {
		return static_cast<int>(
		    std::min<size_t>(inv.ranges_km.size(),
		                     static_cast<size_t>(net.node_count())));
	}

	double unprotected(const Placement& placement) const {
		return unprotected_value(net, covered_mask(dm, placement));
	}

	double unprotected_with(const Placement& placement, NodeId node,
	                        double range) const {
		Placement tentative = placement;
		tentative.batteries.push_back({node, range});
		return unprotected(tentative);
	}
};

void place(Ctx& ctx, Placement& placement, std::vector<BatteryDecision>& trace,
           BatteryDecision decision, NodeId node, double range) {
	placement.batteries.push_back({node, range});
	decision.chosen = node;
	decision.range_km = range;
	decision.unprotected_after = ctx.unprotected(placement);
	trace.push_back(std::move(decision));
}

// Candidate comparison: lower U first, then sequence order, then node id.
bool better(const CandidateEval& a, const CandidateEval& b) {
	if (a.unprotected_after != b.unprotected_after) {
		return a.unprotected_after < b.unprotected_after;
	}
	if (a.sequence != b.sequence) return a.sequence < b.sequence;
	return a.node < b.node;
}

// First battery for strategies 3..7: evaluate the six sequence heads and
// take the lowest resulting unprotected value.
NodeId place_first_by_heads(Ctx& ctx, const RankSequences& seqs,
                            Placement& placement,
                            std::vector<BatteryDecision>& trace) {
	BatteryDecision decision;
	const double range = ctx.inv.ranges_km.front();
	for (int s = 0; s < kSequenceCount; ++s) {
		NodeId node = seqs.order[static_cast<size_t>(s)].front();
		decision.candidates.push_back(
		    {node, ctx.unprotected_with(placement, node, range), s});
	}
	CandidateEval best = decision.candidates.front();
	for (const auto& c : decision.candidates) {
		if (better(c, best)) best = c;
	}
	place(ctx, placement, trace, std::move(decision), best.node, range);
	return best.node;
}

std::vector<NodeId> uncovered_unplaced(Ctx& ctx, const Placement& placement) {
	auto mask = covered_mask(ctx.dm, placement);
	std::vector<NodeId> out;
	for (NodeId v = 0; v < ctx.net.node_count(); ++v) {
		if (!mask[static_cast<size_t>(v)] && !placement.contains(v)) {
			out.push_back(v);
		}
	}
	return out;
}

// Number of M-subsets of `count` elements, saturating at the guard bound.
long long subset_count(int count, int m, long long bound) {
	long long c = 1;
	for (int i = 0; i < m; ++i) {
		c = c * (count - i) / (i + 1);
		if (c > bound) return bound + 1;
	}
	return c;
}

// Shared Step-8 style fallback: place the remaining batteries over the
// currently uncovered nodes, minimizing total unprotected value. With no
// uncovered nodes left, remaining batteries go to the highest-ranked unused
// nodes of the first sequence.
void fallback_exhaustive(Ctx& ctx, const RankSequences& seqs,
                         Placement& placement,
                         std::vector<BatteryDecision>& trace, int next_battery) {
	const int total = ctx.batteries();
	int remaining = total - next_battery;
	if (remaining <= 0) return;

	auto pool = uncovered_unplaced(ctx, placement);
	if (pool.empty()) {
		for (int b = next_battery; b < total; ++b) {
			for (NodeId node : seqs.order[0]) {
				if (placement.contains(node)) continue;
				BatteryDecision d;
				d.exhaustive = true;
				place(ctx, placement, trace, std::move(d), node,
				      ctx.inv.ranges_km[static_cast<size_t>(b)]);
				break;
			}
		}
		return;
	}

	int m = std::min<int>(remaining, static_cast<int>(pool.size()));
	constexpr long long kGuard = 1'000'000;
	bool greedy = subset_count(static_cast<int>(pool.size()), m, kGuard) > kGuard;

	if (!greedy) {
		// Enumerate all m-subsets in ascending lexicographic order; ranges
		// assigned descending to the first-listed node.
		std::vector<int> idx(static_cast<size_t>(m));
		for (int i = 0; i < m; ++i) idx[static_cast<size_t>(i)] = i;
		std::vector<NodeId> best_subset;
		double best_u = std::numeric_limits<double>::infinity();
		while (true) {
			Placement tentative = placement;
			for (int i = 0; i < m; ++i) {
				tentative.batteries.push_back(
				    {pool[static_cast<size_t>(idx[static_cast<size_t>(i)])],
				     ctx.inv.ranges_km[static_cast<size_t>(next_battery + i)]});
			}
			double u = ctx.unprotected(tentative);
			if (u < best_u - 1e-15) {
				best_u = u;
				best_subset.clear();
				for (int i = 0; i < m; ++i) {
					best_subset.push_back(
					    pool[static_cast<size_t>(idx[static_cast<size_t>(i)])]);
				}
			}
			// next combination
			int i = m - 1;
			while (i >= 0 &&
			       idx[static_cast<size_t>(i)] ==
			           static_cast<int>(pool.size()) - m + i) {
				--i;
			}
			if (i < 0) break;
			++idx[static_cast<size_t>(i)];
			for (int j = i + 1; j < m; ++j) {
				idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
			}
		}
		for (int i = 0; i < m; ++i) {
			BatteryDecision d;
			d.exhaustive = true;
			place(ctx, placement, trace, std::move(d),
			      best_subset[static_cast<size_t>(i)],
			      ctx.inv.ranges_km[static_cast<size_t>(next_battery + i)]);
		}
		return;
	}

	// Guard tripped: greedy one battery at a time over the shrinking
	// uncovered set.
	for (int b = next_battery; b < total; ++b) {
		auto current = uncovered_unplaced(ctx, placement);
		if (current.empty()) {
			fallback_exhaustive(ctx, seqs, placement, trace, b);
			return;
		}
		double range = ctx.inv.ranges_km[static_cast<size_t>(b)];
		BatteryDecision d;
		d.exhaustive = true;
		NodeId best_node = current.front();
		double best_u = std::numeric_limits<double>::infinity();
		for (NodeId node : current) {
			double u = ctx.unprotected_with(placement, node, range);
			d.candidates.push_back({node, u, -1});
			if (u < best_u - 1e-15) {
				best_u = u;
				best_node = node;
			}
		}
		place(ctx, placement, trace, std::move(d), best_node, range);
	}
}

CoverageReport finish(Ctx& ctx, const Placement& placement) {
	return evaluate(ctx.net, ctx.dm, placement, ctx.inv.intercept_prob);
}

// Strategies 1 and 2: walk one rank sequence, keeping later batteries
// farther from the first battery than its own range.
StrategyResult rank_walk_strategy(int strategy_id, int sequence_index,
                                  const WeightedLocationNetwork& net,
                                  const DistanceMatrix& dm,
                                  const BatteryInventory& inv) {
	Ctx ctx{net, dm, inv};
	auto seqs = compute_rank_sequences(net, dm);
	const auto& seq = seqs.order[static_cast<size_t>(sequence_index)];

	StrategyResult result;
	result.strategy_id = strategy_id;
	std::vector<BatteryDecision> trace;
	Placement placement;

	NodeId first = seq.front();
	const double first_range = inv.ranges_km.front();
	{
		BatteryDecision d;
		d.candidates.push_back(
		    {first, ctx.unprotected_with(placement, first, first_range),
		     sequence_index});
		place(ctx, placement, trace, std::move(d), first, first_range);
	}

	const int total = ctx.batteries();
	for (int b = 1; b < total; ++b) {
		double range = inv.ranges_km[static_cast<size_t>(b)];
		NodeId chosen = -1;
		for (NodeId node : seq) {
			if (placement.contains(node)) continue;
			if (dm.at(node, first) > first_range + kDistanceEps) {
				chosen = node;
				break;
			}
		}
		bool fallback = chosen < 0;
		if (fallback) {
			// Sequence exhausted by the distance filter: highest-ranked
			// unused node.
			for (NodeId node : seq) {
				if (!placement.contains(node)) {
					chosen = node;
					break;
				}
			}
		}
		BatteryDecision d;
		d.candidates.push_back(
		    {chosen, ctx.unprotected_with(placement, chosen, range),
		     sequence_index});
		d.exhaustive = fallback;
		place(ctx, placement, trace, std::move(d), chosen, range);
	}

	result.placement = placement;
	result.trace = std::move(trace);
	result.report = finish(ctx, placement);
	return result;
}

} // namespace

RankSequences compute_rank_sequences(const WeightedLocationNetwork& net,
                                     const DistanceMatrix& dm) {
	RankSequences seqs;
	seqs.scores[0] = betweenness(net, dm);
	seqs.scores[1] = closeness(net, dm);
	seqs.scores[2] = link_rank(net);
	seqs.scores[3] = eigenvector(net);
	seqs.scores[4] = load(net, dm);
	seqs.scores[5] = degree(net);
	for (int s = 0; s < kSequenceCount; ++s) {
		seqs.order[static_cast<size_t>(s)] =
		    rank_sequence(seqs.scores[static_cast<size_t>(s)]);
	}
	return seqs;
}

StrategyResult strategy_1(const WeightedLocationNetwork& net,
                          const DistanceMatrix& dm,
                          const BatteryInventory& inv) {
	return rank_walk_strategy(1, 0, net, dm, inv);
}

StrategyResult strategy_2(const WeightedLocationNetwork& net,
                          const DistanceMatrix& dm,
                          const BatteryInventory& inv) {
	return rank_walk_strategy(2, 1, net, dm, inv);
}

StrategyResult strategy_3(const WeightedLocationNetwork& net,
                          const DistanceMatrix& dm,
                          const BatteryInventory& inv) {
	Ctx ctx{net, dm, inv};
	auto seqs = compute_rank_sequences(net, dm);
	StrategyResult result;
	result.strategy_id = 3;
	Placement placement;
	std::vector<BatteryDecision> trace;
	place_first_by_heads(ctx, seqs, placement, trace);

	const int total = ctx.batteries();
	const int n = net.node_count();
	int position = 0; // shared position over all six sequences
	for (int b = 1; b < total; ++b) {
		double range = inv.ranges_km[static_cast<size_t>(b)];
		bool placed_this = false;
		while (!placed_this) {
			++position;
			if (position >= n) {
				fallback_exhaustive(ctx, seqs, placement, trace, b);
				result.placement = placement;
				result.trace = std::move(trace);
				result.report = finish(ctx, placement);
				return result;
			}
			BatteryDecision d;
			for (int s = 0; s < kSequenceCount; ++s) {
				NodeId node =
				    seqs.order[static_cast<size_t>(s)][static_cast<size_t>(position)];
				d.candidates.push_back(
				    {node, ctx.unprotected_with(placement, node, range), s});
			}
			CandidateEval best = d.candidates.front();
			for (const auto& c : d.candidates) {
				if (better(c, best)) best = c;
			}
			if (placement.contains(best.node)) continue; // duplication: advance
			place(ctx, placement, trace, std::move(d), best.node, range);
			placed_this = true;
		}
	}

	result.placement = placement;
	result.trace = std::move(trace);
	result.report = finish(ctx, placement);
	return result;
}

StrategyResult strategy_4(const WeightedLocationNetwork& net,
                          const DistanceMatrix& dm,
                          const BatteryInventory& inv) {
	Ctx ctx{net, dm, inv};
	auto seqs = compute_rank_sequences(net, dm);
	StrategyResult result;
	result.strategy_id = 4;
	Placement placement;
	std::vector<BatteryDecision> trace;
	NodeId first = place_first_by_heads(ctx, seqs, placement, trace);
	const double first_range = inv.ranges_km.front();

	// Static filter: only nodes beyond the first battery's reach remain.
	std::array<std::vector<NodeId>, kSequenceCount> filtered;
	for (int s = 0; s < kSequenceCount; ++s) {
		for (NodeId node : seqs.order[static_cast<size_t>(s)]) {
			if (dm.at(node, first) > first_range + kDistanceEps) {
				filtered[static_cast<size_t>(s)].push_back(node);
			}
		}
	}

	const int total = ctx.batteries();
	for (int b = 1; b < total; ++b) {
		double range = inv.ranges_km[static_cast<size_t>(b)];
		BatteryDecision d;
		for (int s = 0; s < kSequenceCount; ++s) {
			if (filtered[static_cast<size_t>(s)].empty()) continue;
			NodeId node = filtered[static_cast<size_t>(s)].front();
			d.candidates.push_back(
			    {node, ctx.unprotected_with(placement, node, range), s});
		}
		// Duplication with an earlier choice drops to the next-lowest
		// candidate; all heads used up means the fallback step.
		std::vector<CandidateEval> ordered = d.candidates;
		std::sort(ordered.begin(), ordered.end(), better);
		NodeId chosen = -1;
		for (const auto& c : ordered) {
			if (!placement.contains(c.node)) {
				chosen = c.node;
				break;
			}
		}
		if (chosen < 0) {
			fallback_exhaustive(ctx, seqs, placement, trace, b);
			break;
		}
		place(ctx, placement, trace, std::move(d), chosen, range);
	}

	result.placement = placement;
	result.trace = std::move(trace);
	result.report = finish(ctx, placement);
	return result;
}

StrategyResult strategy_5(const WeightedLocationNetwork& net,
                          const DistanceMatrix& dm,
                          const BatteryInventory& inv) {
	Ctx ctx{net, dm, inv};
	auto seqs = compute_rank_sequences(net, dm);
	StrategyResult result;
	result.strategy_id = 5;
	Placement placement;
	std::vector<BatteryDecision> trace;
	NodeId first = place_first_by_heads(ctx, seqs, placement, trace);
	const double first_range = inv.ranges_km.front();

	const int total = ctx.batteries();
	for (int b = 1; b < total; ++b) {
		double range = inv.ranges_km[static_cast<size_t>(b)];
		BatteryDecision d;
		// Marginal-coverage greedy: each sequence contributes its next
		// eligible node, scored by the unprotected value left after adding
		// it to everything already placed.
		for (int s = 0; s < kSequenceCount; ++s) {
			for (NodeId node : seqs.order[static_cast<size_t>(s)]) {
				if (placement.contains(node)) continue;
				if (dm.at(node, first) <= first_range + kDistanceEps) continue;
				d.candidates.push_back(
				    {node, ctx.unprotected_with(placement, node, range), s});
				break;
			}
		}
		if (d.candidates.empty()) {
			fallback_exhaustive(ctx, seqs, placement, trace, b);
			break;
		}
		CandidateEval best = d.candidates.front();
		for (const auto& c : d.candidates) {
			if (better(c, best)) best = c;
		}
		place(ctx, placement, trace, std::move(d), best.node, range);
	}

	result.placement = placement;
	result.trace = std::move(trace);
	result.report = finish(ctx, placement);
	return result;
}

namespace {

// Candidate pool for strategies 6 and 7: nodes on the farthest-node path
// from the first battery, its return path, and the paths from both
// diameter endpoints back to the first battery. First-encountered order,
// first battery's node excluded.
std::vector<NodeId> path_pool(const WeightedLocationNetwork& net,
                              const DistanceMatrix& dm, NodeId first) {
	std::vector<NodeId> pool;
	std::vector<bool> seen(static_cast<size_t>(net.node_count()), false);
	seen[static_cast<size_t>(first)] = true;
	auto add_path = [&](const std::vector<NodeId>& nodes) {
		for (NodeId v : nodes) {
			if (!seen[static_cast<size_t>(v)]) {
				seen[static_cast<size_t>(v)] = true;
				pool.push_back(v);
			}
		}
	};
	PathResult far = farthest_node_path(net, dm, first);
	add_path(far.nodes);
	add_path(shortest_path(net, far.nodes.back(), first).nodes);
	DiameterResult diam = diameter(dm);
	add_path(shortest_path(net, diam.source, first).nodes);
	add_path(shortest_path(net, diam.target, first).nodes);
	return pool;
}

StrategyResult pool_strategy(int strategy_id,
                             const WeightedLocationNetwork& net,
                             const DistanceMatrix& dm,
                             const BatteryInventory& inv) {
	Ctx ctx{net, dm, inv};
	auto seqs = compute_rank_sequences(net, dm);
	StrategyResult result;
	result.strategy_id = strategy_id;
	Placement placement;
	std::vector<BatteryDecision> trace;
	NodeId first = place_first_by_heads(ctx, seqs, placement, trace);

	std::vector<NodeId> pool = path_pool(net, dm, first);
	if (strategy_id == 7) {
		// Re-rank the pool by betweenness, ties keeping pool order.
		const ScoreVector& bc = seqs.scores[0];
		std::stable_sort(pool.begin(), pool.end(), [&bc](NodeId a, NodeId b) {
			return bc[static_cast<size_t>(a)] > bc[static_cast<size_t>(b)];
		});
	}

	const int total = ctx.batteries();
	for (int b = 1; b < total; ++b) {
		double range = inv.ranges_km[static_cast<size_t>(b)];
		BatteryDecision d;
		for (NodeId node : pool) {
			if (placement.contains(node)) continue;
			d.candidates.push_back(
			    {node, ctx.unprotected_with(placement, node, range), -1});
		}
		if (d.candidates.empty()) {
			fallback_exhaustive(ctx, seqs, placement, trace, b);
			break;
		}
		// First minimum in pool order wins.
		CandidateEval best = d.candidates.front();
		for (const auto& c : d.candidates) {
			if (c.unprotected_after < best.unprotected_after - 1e-15) best = c;
		}
		place(ctx, placement, trace, std::move(d), best.node, range);
	}

	result.placement = placement;
	result.trace = std::move(trace);
	result.report = finish(ctx, placement);
	return result;
}

} // namespace

StrategyResult strategy_6(const WeightedLocationNetwork& net,
                          const DistanceMatrix& dm,
                          const BatteryInventory& inv) {
	return pool_strategy(6, net, dm, inv);
}

StrategyResult strategy_7(const WeightedLocationNetwork& net,
                          const DistanceMatrix& dm,
                          const BatteryInventory& inv) {
	return pool_strategy(7, net, dm, inv);
}

StrategyResult exhaustive_optimal(const WeightedLocationNetwork& net,
                                  const DistanceMatrix& dm,
                                  const BatteryInventory& inv) {
	Ctx ctx{net, dm, inv};
	const int n = net.node_count();
	const int b = ctx.batteries();
	double assignments = 1.0;
	for (int i = 0; i < b; ++i) assignments *= n - i;
	if (assignments > 1e7) {
		throw ConfigError("oracle bound exceeded");
	}

	std::vector<NodeId> current(static_cast<size_t>(b), -1);
	std::vector<bool> used(static_cast<size_t>(n), false);
	std::vector<NodeId> best_tuple;
	double best_u = std::numeric_limits<double>::infinity();

	// Depth-first over ordered tuples of distinct nodes in lexicographic
	// order; strict improvement keeps the smallest tie.
	auto recurse = [&](auto&& self, int depth) -> void {
		if (depth == b) {
			Placement p;
			for (int i = 0; i < b; ++i) {
				p.batteries.push_back(
				    {current[static_cast<size_t>(i)],
				     inv.ranges_km[static_cast<size_t>(i)]});
			}
			double u = ctx.unprotected(p);
			if (u < best_u - 1e-15) {
				best_u = u;
				best_tuple = current;
			}
			return;
		}
		for (NodeId v = 0; v < n; ++v) {
			if (used[static_cast<size_t>(v)]) continue;
			used[static_cast<size_t>(v)] = true;
			current[static_cast<size_t>(depth)] = v;
			self(self, depth + 1);
			used[static_cast<size_t>(v)] = false;
		}
	};
	recurse(recurse, 0);

	StrategyResult result;
	result.strategy_id = 0;
	for (int i = 0; i < b; ++i) {
		result.placement.batteries.push_back(
		    {best_tuple[static_cast<size_t>(i)],
		     inv.ranges_km[static_cast<size_t>(i)]});
		BatteryDecision d;
		d.exhaustive = true;
		d.chosen = best_tuple[static_cast<size_t>(i)];
		d.range_km = inv.ranges_km[static_cast<size_t>(i)];
		Placement prefix;
		prefix.batteries.assign(result.placement.batteries.begin(),
		                        result.placement.batteries.begin() + i + 1);
		d.unprotected_after = ctx.unprotected(prefix);
		result.trace.push_back(std::move(d));
	}
	result.report = finish(ctx, result.placement);
	return result;
}

std::vector<StrategyResult> run_all(const WeightedLocationNetwork& net,
                                    const DistanceMatrix& dm,
                                    const BatteryInventory& inv) {
	std::vector<StrategyResult> results;
	results.reserve(7);
	for (int id = 1; id <= 7; ++id) {
		results.push_back(run_strategy(id, net, dm, inv));
	}
	return results;
}

StrategyResult run_strategy(int strategy_id, const WeightedLocationNetwork& net,
                            const DistanceMatrix& dm,
                            const BatteryInventory& inv) {
	switch (strategy_id) {
		case 0: return exhaustive_optimal(net, dm, inv);
		case 1: return strategy_1(net, dm, inv);
		case 2: return strategy_2(net, dm, inv);
		case 3: return strategy_3(net, dm, inv);
		case 4: return strategy_4(net, dm, inv);
		case 5: return strategy_5(net, dm, inv);
		case 6: return strategy_6(net, dm, inv);
		case 7: return strategy_7(net, dm, inv);
		default: throw ConfigError("strategy id must be 0..7");
	}
}

} // namespace iads
