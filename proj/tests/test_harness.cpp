#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "iads/errors.hpp"
#include "iads/harness.hpp"
#include "oracles.hpp"

using namespace iads;

TEST_CASE("ols recovers exact linear data") {
	std::vector<double> x1{1, 2, 3, 4, 5, 6};
	std::vector<double> x2{2, 1, 5, 3, 8, 2};
	std::vector<double> y;
	for (size_t i = 0; i < x1.size(); ++i) y.push_back(2.0 + 3.0 * x1[i] - x2[i]);
	auto fit = ols_fit(y, x1, x2);
	CHECK(fit.beta0 == doctest::Approx(2.0).epsilon(1e-10));
	CHECK(fit.beta_diameter == doctest::Approx(3.0).epsilon(1e-10));
	CHECK(fit.beta_sum_ranges == doctest::Approx(-1.0).epsilon(1e-10));
	CHECK(fit.r_squared == doctest::Approx(1.0).epsilon(1e-12));
	CHECK(fit.n_obs == 6);
	CHECK(fit.predict(10.0, 4.0) == doctest::Approx(28.0));
}

TEST_CASE("ols rejects degenerate designs") {
	std::vector<double> x1{1, 2, 3, 4};
	std::vector<double> x2{2, 4, 6, 8}; // collinear with x1
	std::vector<double> y{1, 2, 3, 4};
	CHECK_THROWS_WITH_AS(ols_fit(y, x1, x2), "collinear covariates", ConfigError);
	CHECK_THROWS_AS(ols_fit({1, 2, 3}, {1, 2, 3}, {2, 5, 1}), ConfigError);
	CHECK_THROWS_AS(ols_fit({1, 2, 3, 4}, {1, 2, 3}, {2, 5, 1, 0}), ConfigError);
}

TEST_CASE("ols is invariant under observation permutation") {
	oracles::TestRng rng(808);
	std::vector<double> x1, x2, y;
	for (int i = 0; i < 25; ++i) {
		x1.push_back(rng.uniform01() * 100);
		x2.push_back(rng.uniform01() * 50);
		y.push_back(1.5 + 0.2 * x1.back() - 0.3 * x2.back() + rng.uniform01());
	}
	auto a = ols_fit(y, x1, x2);
	std::vector<double> px1(x1.rbegin(), x1.rend());
	std::vector<double> px2(x2.rbegin(), x2.rend());
	std::vector<double> py(y.rbegin(), y.rend());
	auto b = ols_fit(py, px1, px2);
	CHECK(a.beta0 == doctest::Approx(b.beta0).epsilon(1e-10));
	CHECK(a.beta_diameter == doctest::Approx(b.beta_diameter).epsilon(1e-10));
	CHECK(a.beta_sum_ranges == doctest::Approx(b.beta_sum_ranges).epsilon(1e-10));
	CHECK(a.r_squared == doctest::Approx(b.r_squared).epsilon(1e-10));
}

TEST_CASE("regression fixture shape and fits") {
	const auto& rows = table5_fixture();
	REQUIRE(rows.size() == 20);
	for (const auto& r : rows) {
		CHECK(r.node_count == 50);
		CHECK(r.total_asset > 0.0);
		CHECK(r.unprotected_value >= 0.0);
		CHECK(r.unprotected_value <= r.total_asset);
		CHECK(r.intercept_prob == 0.98);
		CHECK_FALSE(r.ranges_km.empty());
		CHECK(std::is_sorted(r.ranges_km.rbegin(), r.ranges_km.rend()));
	}
	CHECK(rows[0].sum_ranges() == doctest::Approx(150.0));
	CHECK(rows[19].sum_ranges() == doctest::Approx(600.0));

	std::vector<double> omega, pct, diam, ranges;
	for (const auto& r : rows) {
		omega.push_back(r.omega);
		pct.push_back(r.worst_case_pct);
		diam.push_back(r.diameter_km);
		ranges.push_back(r.sum_ranges());
	}
	// reference coefficients computed with an independent least-squares solver
	auto fo = ols_fit(omega, diam, ranges);
	CHECK(fo.beta0 == doctest::Approx(0.56151721).epsilon(1e-6));
	CHECK(fo.beta_diameter == doctest::Approx(0.00080845).epsilon(1e-4));
	CHECK(fo.beta_sum_ranges == doctest::Approx(-0.00072294).epsilon(1e-4));
	CHECK(fo.r_squared == doctest::Approx(0.7295).epsilon(1e-3));

	auto fp = ols_fit(pct, diam, ranges);
	CHECK(fp.beta0 == doctest::Approx(15.61973942).epsilon(1e-6));
	CHECK(fp.beta_diameter == doctest::Approx(0.0463238).epsilon(1e-4));
	CHECK(fp.beta_sum_ranges == doctest::Approx(-0.04400973).epsilon(1e-4));
	CHECK(fp.r_squared == doctest::Approx(0.5530).epsilon(1e-3));
}

TEST_CASE("aggregate_optimal keeps per-network minima including ties") {
	auto row = [](int sid, double omega, double u) {
		ExperimentRow r;
		r.strategy_id = sid;
		r.omega = omega;
		r.node_count = 50;
		r.diameter_km = 100.0;
		r.total_asset = 15.0;
		r.ranges_km = {80, 70};
		r.unprotected_value = u;
		return r;
	};
	std::vector<ExperimentRow> rows{
	    row(1, 0.5, 2.0), row(2, 0.5, 1.0), row(3, 0.5, 1.0),
	    row(1, 0.9, 0.4), row(2, 0.9, 0.6),
	};
	auto best = aggregate_optimal(rows);
	REQUIRE(best.size() == 3);
	CHECK(best[0].strategy_id == 2);
	CHECK(best[1].strategy_id == 3);
	CHECK(best[2].strategy_id == 1);
	CHECK(best[2].unprotected_value == 0.4);
	CHECK(aggregate_optimal({}).empty());
}

TEST_CASE("rows survive a CSV round trip") {
	const auto& rows = table5_fixture();
	std::stringstream buf;
	write_rows_csv(buf, rows);
	auto back = read_rows_csv(buf);
	REQUIRE(back.size() == rows.size());
	for (size_t i = 0; i < rows.size(); ++i) {
		CHECK(back[i].strategy_id == rows[i].strategy_id);
		CHECK(back[i].omega == doctest::Approx(rows[i].omega).epsilon(1e-9));
		CHECK(back[i].node_count == rows[i].node_count);
		CHECK(back[i].diameter_km == rows[i].diameter_km);
		CHECK(back[i].min_edge_km == rows[i].min_edge_km);
		CHECK(back[i].max_edge_km == rows[i].max_edge_km);
		CHECK(back[i].total_asset == doctest::Approx(rows[i].total_asset));
		CHECK(back[i].ranges_km == rows[i].ranges_km);
		CHECK(back[i].intercept_prob == rows[i].intercept_prob);
		CHECK(back[i].unprotected_value ==
		      doctest::Approx(rows[i].unprotected_value).epsilon(1e-9));
		CHECK(back[i].worst_case_pct ==
		      doctest::Approx(rows[i].worst_case_pct).epsilon(1e-5));
	}
}

TEST_CASE("read_rows_csv rejects malformed input") {
	std::stringstream empty;
	CHECK_THROWS_AS(read_rows_csv(empty), ConfigError);
	std::stringstream bad("header\n1,2,3\n");
	CHECK_THROWS_AS(read_rows_csv(bad), ConfigError);
	std::stringstream nonnum(
	    "h\n1,x,50,1,1,1,15,80;70,0.98,1,10\n");
	CHECK_THROWS_AS(read_rows_csv(nonnum), ConfigError);
}

TEST_CASE("emit_plot_data matches predict on the grid") {
	RegressionFit fit;
	fit.beta0 = 10.0;
	fit.beta_diameter = 0.05;
	fit.beta_sum_ranges = -0.02;
	std::vector<double> grid{100, 200, 300};
	std::vector<double> levels{150, 280, 400, 600};
	std::stringstream buf;
	emit_plot_data(buf, fit, grid, levels);

	std::string header;
	std::getline(buf, header);
	CHECK(header == "diameter_km,sum_ranges_km,predicted");
	int lines = 0;
	std::string line;
	while (std::getline(buf, line)) {
		std::istringstream ls(line);
		std::string f;
		std::getline(ls, f, ',');
		double d = std::stod(f);
		std::getline(ls, f, ',');
		double level = std::stod(f);
		std::getline(ls, f, ',');
		double pred = std::stod(f);
		CHECK(pred == doctest::Approx(fit.predict(d, level)).epsilon(1e-9));
		++lines;
	}
	CHECK(lines == 12);
}

TEST_CASE("run_experiment emits seven aligned rows per configuration") {
	ExperimentConfig cfg;
	cfg.gen.n = 24;
	cfg.gen.k = 4;
	cfg.gen.beta = 0.5;
	cfg.gen.seed = 9;
	cfg.inventory = BatteryInventory({80, 70}, 0.98);
	cfg.small_world_samples = 4;
	auto out = run_experiment({cfg, cfg});
	REQUIRE(out.rows.size() == 14);
	REQUIRE(out.results.size() == 14);
	for (size_t i = 0; i < out.rows.size(); ++i) {
		CHECK(out.rows[i].strategy_id == static_cast<int>(i % 7) + 1);
		CHECK(out.rows[i].node_count == 24);
		CHECK(out.rows[i].ranges_km == std::vector<double>{80, 70});
		CHECK(out.rows[i].unprotected_value ==
		      out.results[i].report.unprotected_value);
		// identical config: identical rows
		CHECK(out.rows[i].omega == out.rows[i % 7].omega);
		CHECK(out.rows[i].unprotected_value == out.rows[i % 7].unprotected_value);
	}
	auto best = aggregate_optimal(out.rows);
	CHECK_FALSE(best.empty());
	double min_u = out.rows[0].unprotected_value;
	for (size_t i = 0; i < 7; ++i) min_u = std::min(min_u, out.rows[i].unprotected_value);
	for (const auto& r : best) CHECK(r.unprotected_value == min_u);
	CHECK_THROWS_AS(run_experiment({}), ConfigError);
}

TEST_CASE("scores CSV lists one row per node") {
	auto net = oracles::random_connected_graph(6, 12);
	auto dm = all_pairs_shortest_paths(net);
	std::stringstream buf;
	write_scores_csv(buf, net, dm);
	std::string line;
	std::getline(buf, line);
	CHECK(line == "node,betweenness,closeness,link_rank,eigenvector,load,degree");
	int count = 0;
	while (std::getline(buf, line)) ++count;
	CHECK(count == 6);
}
