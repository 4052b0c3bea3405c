#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "iads/coverage.hpp"
#include "iads/netgen.hpp"
#include "iads/strategies.hpp"

namespace iads {

/// One result-table row: the column set of the experiment tables.
struct ExperimentRow {
	int strategy_id = 0;
	double omega = 0.0;
	int node_count = 0;
	double diameter_km = 0.0;
	double min_edge_km = 0.0;
	double max_edge_km = 0.0;
	double total_asset = 0.0;
	std::vector<double> ranges_km;
	double intercept_prob = 0.98;
	double unprotected_value = 0.0;
	double worst_case_pct = 0.0;

	double sum_ranges() const;
};

struct RegressionFit {
	double beta0 = 0.0;
	double beta_diameter = 0.0;
	double beta_sum_ranges = 0.0;
	double r_squared = 0.0;
	int n_obs = 0;

	double predict(double diameter_km, double sum_ranges_km) const {
		return beta0 + beta_diameter * diameter_km + beta_sum_ranges * sum_ranges_km;
	}
};

struct ExperimentConfig {
	GenerationConfig gen;
	BatteryInventory inventory;
	int small_world_samples = 10;
};

struct ExperimentOutput {
	std::vector<ExperimentRow> rows;
	// Full strategy results aligned with rows, the debugging surface.
	std::vector<StrategyResult> results;
};

/// Generate each configured network, run all seven strategies, emit seven
/// rows per (network, inventory). Deterministic given seeds.
ExperimentOutput run_experiment(const std::vector<ExperimentConfig>& configs);

/// Per (network, inventory) group, the row(s) with minimal unprotected
/// value; ties all reported.
std::vector<ExperimentRow> aggregate_optimal(const std::vector<ExperimentRow>& rows);

/// Least squares of y on [1, x1, x2].
/// Throws ConfigError("collinear covariates") on a rank-deficient design.
RegressionFit ols_fit(const std::vector<double>& y, const std::vector<double>& x1,
                      const std::vector<double>& x2);

/// The embedded 20-row aggregated-optimal table used as the regression
/// fixture. Tied strategies carry the first listed strategy id.
const std::vector<ExperimentRow>& table5_fixture();

/// Prediction grid CSV: one row per (diameter, sum_ranges) pair.
void emit_plot_data(std::ostream& out, const RegressionFit& fit,
                    const std::vector<double>& diameter_grid,
                    const std::vector<double>& sum_ranges_levels);

/// Fixed-schema CSV with one row per ExperimentRow.
void write_rows_csv(std::ostream& out, const std::vector<ExperimentRow>& rows);

/// Inverse of write_rows_csv. Throws ConfigError on malformed input.
std::vector<ExperimentRow> read_rows_csv(std::istream& in);

/// Centrality score table: node,betweenness,closeness,link_rank,
/// eigenvector,load,degree.
void write_scores_csv(std::ostream& out, const WeightedLocationNetwork& net,
                      const DistanceMatrix& dm);

} // namespace iads
