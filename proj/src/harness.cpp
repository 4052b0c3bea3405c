#include "iads/harness.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "iads/errors.hpp"

namespace iads {

namespace {

// 3x3 symmetric solve by Gaussian elimination with partial pivoting.
std::array<double, 3> solve3(std::array<std::array<double, 4>, 3> a) {
	for (int col = 0; col < 3; ++col) {
		int pivot = col;
		for (int row = col + 1; row < 3; ++row) {
			if (std::abs(a[static_cast<size_t>(row)][static_cast<size_t>(col)]) >
			    std::abs(a[static_cast<size_t>(pivot)][static_cast<size_t>(col)])) {
				pivot = row;
			}
		}
		std::swap(a[static_cast<size_t>(col)], a[static_cast<size_t>(pivot)]);
		double diag = a[static_cast<size_t>(col)][static_cast<size_t>(col)];
		if (std::abs(diag) < 1e-12) {
			throw ConfigError("collinear covariates");
		}
		for (int row = 0; row < 3; ++row) {
			if (row == col) continue;
			double factor =
			    a[static_cast<size_t>(row)][static_cast<size_t>(col)] / diag;
			for (int c = col; c < 4; ++c) {
				a[static_cast<size_t>(row)][static_cast<size_t>(c)] -=
				    factor * a[static_cast<size_t>(col)][static_cast<size_t>(c)];
			}
		}
	}
	return {a[0][3] / a[0][0], a[1][3] / a[1][1], a[2][3] / a[2][2]};
}

std::string format_ranges(const std::vector<double>& ranges) {
	std::ostringstream out;
	for (size_t i = 0; i < ranges.size(); ++i) {
		if (i) out << ';';
		out << ranges[i];
	}
	return out.str();
}

bool same_network(const ExperimentRow& a, const ExperimentRow& b) {
	return a.omega == b.omega && a.node_count == b.node_count &&
	       a.diameter_km == b.diameter_km && a.min_edge_km == b.min_edge_km &&
	       a.max_edge_km == b.max_edge_km && a.total_asset == b.total_asset &&
	       a.ranges_km == b.ranges_km && a.intercept_prob == b.intercept_prob;
}

ExperimentRow fixture_row(int strategy_id, double omega, double diameter,
                          double min_edge, double max_edge, double total,
                          std::vector<double> ranges, double u, double pct) {
	ExperimentRow row;
	row.strategy_id = strategy_id;
	row.omega = omega;
	row.node_count = 50;
	row.diameter_km = diameter;
	row.min_edge_km = min_edge;
	row.max_edge_km = max_edge;
	row.total_asset = total;
	row.ranges_km = std::move(ranges);
	row.intercept_prob = 0.98;
	row.unprotected_value = u;
	row.worst_case_pct = pct;
	return row;
}

} // namespace

double ExperimentRow::sum_ranges() const {
	double s = 0.0;
	for (double r : ranges_km) s += r;
	return s;
}

ExperimentOutput run_experiment(const std::vector<ExperimentConfig>& configs) {
	if (configs.empty()) {
		throw ConfigError("experiment needs at least one configuration");
	}
	ExperimentOutput out;
	for (size_t ci = 0; ci < configs.size(); ++ci) {
		const auto& cfg = configs[ci];
		WeightedLocationNetwork net = [&] {
			try {
				return generate(cfg.gen);
			} catch (const std::exception& e) {
				std::ostringstream msg;
				msg << "config " << ci << " (seed " << cfg.gen.seed
				    << "): " << e.what();
				throw NumericError(msg.str());
			}
		}();
		DistanceMatrix dm = all_pairs_shortest_paths(net);
		SmallWorldness sw =
		    small_worldness(net, cfg.small_world_samples, cfg.gen.seed);
		DiameterResult diam = diameter(dm);
		double min_edge = net.edges().front().km;
		double max_edge = min_edge;
		for (const Edge& e : net.edges()) {
			min_edge = std::min(min_edge, e.km);
			max_edge = std::max(max_edge, e.km);
		}
		for (StrategyResult& r : run_all(net, dm, cfg.inventory)) {
			ExperimentRow row;
			row.strategy_id = r.strategy_id;
			row.omega = sw.omega;
			row.node_count = net.node_count();
			row.diameter_km = diam.km;
			row.min_edge_km = min_edge;
			row.max_edge_km = max_edge;
			row.total_asset = net.total_asset();
			row.ranges_km = cfg.inventory.ranges_km;
			row.intercept_prob = cfg.inventory.intercept_prob;
			row.unprotected_value = r.report.unprotected_value;
			row.worst_case_pct = r.report.worst_case_pct;
			out.rows.push_back(std::move(row));
			out.results.push_back(std::move(r));
		}
	}
	return out;
}

std::vector<ExperimentRow> aggregate_optimal(
    const std::vector<ExperimentRow>& rows) {
	std::vector<ExperimentRow> out;
	size_t i = 0;
	while (i < rows.size()) {
		size_t j = i;
		double min_u = rows[i].unprotected_value;
		while (j < rows.size() && same_network(rows[j], rows[i])) {
			min_u = std::min(min_u, rows[j].unprotected_value);
			++j;
		}
		for (size_t k = i; k < j; ++k) {
			if (rows[k].unprotected_value == min_u) out.push_back(rows[k]);
		}
		i = j;
	}
	return out;
}

RegressionFit ols_fit(const std::vector<double>& y, const std::vector<double>& x1,
                      const std::vector<double>& x2) {
	const size_t n = y.size();
	if (n < 4 || x1.size() != n || x2.size() != n) {
		throw ConfigError("regression needs at least 4 aligned observations");
	}
	// Normal equations X'X b = X'y over [1, x1, x2].
	std::array<std::array<double, 4>, 3> a{};
	for (size_t i = 0; i < n; ++i) {
		std::array<double, 3> row{1.0, x1[i], x2[i]};
		for (int r = 0; r < 3; ++r) {
			for (int c = 0; c < 3; ++c) {
				a[static_cast<size_t>(r)][static_cast<size_t>(c)] +=
				    row[static_cast<size_t>(r)] * row[static_cast<size_t>(c)];
			}
			a[static_cast<size_t>(r)][3] += row[static_cast<size_t>(r)] * y[i];
		}
	}
	auto beta = solve3(a);

	double mean_y = 0.0;
	for (double v : y) mean_y += v;
	mean_y /= static_cast<double>(n);
	double ss_res = 0.0;
	double ss_tot = 0.0;
	for (size_t i = 0; i < n; ++i) {
		double pred = beta[0] + beta[1] * x1[i] + beta[2] * x2[i];
		ss_res += (y[i] - pred) * (y[i] - pred);
		ss_tot += (y[i] - mean_y) * (y[i] - mean_y);
	}
	RegressionFit fit;
	fit.beta0 = beta[0];
	fit.beta_diameter = beta[1];
	fit.beta_sum_ranges = beta[2];
	fit.r_squared = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
	fit.n_obs = static_cast<int>(n);
	return fit;
}

const std::vector<ExperimentRow>& table5_fixture() {
	static const std::vector<double> two{80, 70};
	static const std::vector<double> three{110, 90, 80};
	static const std::vector<double> four{120, 110, 90, 80};
	static const std::vector<double> five{200, 120, 110, 90, 80};
	// Aggregated per-network optima; tied strategies carry the first id.
	static const std::vector<ExperimentRow> rows = {
	    fixture_row(5, 0.39692, 123.0, 20.5, 184.5, 14.9, two, 0.2, 3.315436),
	    fixture_row(5, 0.582777, 133.0, 19.0, 171.0, 14.4, two, 0.2, 3.3611111),
	    fixture_row(5, 0.640091, 200.0, 20.0, 160.0, 14.3, two, 1.3, 10.90909),
	    fixture_row(5, 0.807039, 710.0, 10.0, 70.0, 15.4, two, 6.6, 44.00),
	    fixture_row(5, 1.145887, 560.0, 10.0, 80.0, 14.1, two, 7.9, 56.907801),
	    fixture_row(5, 0.423134, 210.0, 35.0, 315.0, 13.8, three, 0.0, 2.0),
	    fixture_row(4, 0.564176, 270.0, 18.0, 144.0, 15.0, three, 2.1, 15.72),
	    fixture_row(5, 0.640606, 200.0, 25.0, 225.0, 15.7, three, 0.1, 2.6242038),
	    fixture_row(5, 0.829442, 345.0, 23.0, 184.0, 15.4, three, 3.5, 24.272727),
	    fixture_row(5, 1.16390, 960.0, 20.0, 160.0, 14.2, three, 9.4, 66.873239),
	    fixture_row(5, 0.25351, 270.0, 45.0, 405.0, 14.1, four, 0.3, 4.0851),
	    fixture_row(5, 0.405311, 360.0, 60.0, 540.0, 13.2, four, 5.3, 41.34848),
	    fixture_row(5, 0.652449, 375.0, 25.0, 200.0, 16.2, four, 1.5, 11.074074),
	    fixture_row(5, 0.934170, 697.0, 17.0, 119.0, 14.6, four, 3.0, 22.136986),
	    fixture_row(5, 1.11291, 960.0, 15.0, 135.0, 16.1, four, 7.0, 44.608696),
	    fixture_row(5, 0.344096, 480.0, 80.0, 640.0, 16.2, five, 2.3, 15.91358),
	    fixture_row(5, 0.431319, 375.0, 75.0, 675.0, 14.7, five, 2.6, 19.333333),
	    fixture_row(5, 0.652398, 550.0, 50.0, 400.0, 15.3, five, 2.6, 18.65359),
	    fixture_row(5, 0.880917, 600.0, 40.0, 360.0, 14.7, five, 1.8, 14.0),
	    fixture_row(5, 1.12557, 1425.0, 25.0, 250.0, 14.0, five, 4.1, 30.7),
	};
	return rows;
}

void emit_plot_data(std::ostream& out, const RegressionFit& fit,
                    const std::vector<double>& diameter_grid,
                    const std::vector<double>& sum_ranges_levels) {
	out << "diameter_km,sum_ranges_km,predicted\n";
	for (double level : sum_ranges_levels) {
		for (double d : diameter_grid) {
			out << d << ',' << level << ','
			    << std::setprecision(10) << fit.predict(d, level) << '\n';
		}
	}
}

void write_rows_csv(std::ostream& out, const std::vector<ExperimentRow>& rows) {
	out << "strategy_id,omega,node_count,diameter_km,min_edge_km,max_edge_km,"
	       "total_asset,ranges_km,intercept_prob,unprotected_value,"
	       "worst_case_pct\n";
	for (const ExperimentRow& r : rows) {
		out << r.strategy_id << ',' << std::setprecision(10) << r.omega << ','
		    << r.node_count << ',' << r.diameter_km << ',' << r.min_edge_km << ','
		    << r.max_edge_km << ',' << r.total_asset << ','
		    << format_ranges(r.ranges_km) << ',' << r.intercept_prob << ','
		    << r.unprotected_value << ',' << std::setprecision(6)
		    << r.worst_case_pct << '\n';
	}
}

std::vector<ExperimentRow> read_rows_csv(std::istream& in) {
	std::string line;
	if (!std::getline(in, line)) {
		throw ConfigError("empty results CSV");
	}
	std::vector<ExperimentRow> rows;
	while (std::getline(in, line)) {
		if (line.empty()) continue;
		std::istringstream ls(line);
		std::string field;
		std::vector<std::string> fields;
		while (std::getline(ls, field, ',')) fields.push_back(field);
		if (fields.size() != 11) {
			throw ConfigError("malformed results CSV row: " + line);
		}
		ExperimentRow r;
		try {
			r.strategy_id = std::stoi(fields[0]);
			r.omega = std::stod(fields[1]);
			r.node_count = std::stoi(fields[2]);
			r.diameter_km = std::stod(fields[3]);
			r.min_edge_km = std::stod(fields[4]);
			r.max_edge_km = std::stod(fields[5]);
			r.total_asset = std::stod(fields[6]);
			std::istringstream rs(fields[7]);
			std::string part;
			while (std::getline(rs, part, ';')) {
				r.ranges_km.push_back(std::stod(part));
			}
			r.intercept_prob = std::stod(fields[8]);
			r.unprotected_value = std::stod(fields[9]);
			r.worst_case_pct = std::stod(fields[10]);
		} catch (const std::exception&) {
			throw ConfigError("malformed results CSV row: " + line);
		}
		rows.push_back(std::move(r));
	}
	return rows;
}

void write_scores_csv(std::ostream& out, const WeightedLocationNetwork& net,
                      const DistanceMatrix& dm) {
	auto seqs = compute_rank_sequences(net, dm);
	out << "node,betweenness,closeness,link_rank,eigenvector,load,degree\n";
	for (NodeId v = 0; v < net.node_count(); ++v) {
		out << v;
		for (int s = 0; s < kSequenceCount; ++s) {
			out << ',' << std::setprecision(12)
			    << seqs.scores[static_cast<size_t>(s)][static_cast<size_t>(v)];
		}
		out << '\n';
	}
}

} // namespace iads
