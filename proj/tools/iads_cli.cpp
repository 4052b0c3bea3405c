// Command-line front end: generate networks, score nodes, place batteries,
// run batch experiments, and fit the regression over the results.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "iads/errors.hpp"
#include "iads/harness.hpp"
#include "iads/json_io.hpp"

namespace {

using namespace iads;

struct OutStream {
	std::ofstream file;
	std::ostream& ref;

	explicit OutStream(const std::string& path)
	    : file(path.empty() ? std::ofstream() : std::ofstream(path)),
	      ref(path.empty() ? std::cout : file) {
		if (!path.empty() && !file) {
			throw ConfigError("cannot write file: " + path);
		}
	}
};

std::vector<double> parse_ranges(const std::string& spec) {
	std::vector<double> ranges;
	std::istringstream in(spec);
	std::string part;
	while (std::getline(in, part, ',')) {
		try {
			ranges.push_back(std::stod(part));
		} catch (const std::exception&) {
			throw ConfigError("bad range value: " + part);
		}
	}
	return ranges;
}

void add_generation_flags(CLI::App* cmd, GenerationConfig& gen) {
	cmd->add_option("--nodes", gen.n, "node count");
	cmd->add_option("--ring-degree", gen.k, "even ring-lattice degree");
	cmd->add_option("--beta", gen.beta, "rewiring probability");
	cmd->add_option("--unit-km", gen.unit_km, "base edge length L0 in km");
	cmd->add_option("--mult-max", gen.mult_max, "max integer length multiplier");
	cmd->add_option("--asset-exponent", gen.asset_exponent,
	                "power-law shape for asset values");
	cmd->add_option("--seed", gen.seed, "generation seed");
}

int run(int argc, char** argv) {
	CLI::App app{"Air-defense battery placement on weighted location networks"};
	app.require_subcommand(1);

	std::string out_path;
	app.add_option("--out", out_path, "output file (default stdout)")
	    ->configurable(false);

	// generate
	auto* generate_cmd = app.add_subcommand("generate", "emit a network JSON");
	GenerationConfig gen;
	add_generation_flags(generate_cmd, gen);
	int sw_samples = 10;
	generate_cmd->add_option("--omega-samples", sw_samples,
	                         "random-reference samples for small-worldness");

	// scores
	auto* scores_cmd = app.add_subcommand("scores", "centrality scores as CSV");
	std::string input_path;
	scores_cmd->add_option("--input", input_path, "network JSON")->required();

	// place
	auto* place_cmd =
	    app.add_subcommand("place", "run one strategy (or all) on a network");
	std::string place_input;
	std::string ranges_spec = "80,70";
	double intercept_prob = 0.98;
	int strategy_id = 0;
	bool all_strategies = false;
	place_cmd->add_option("--input", place_input, "network JSON")->required();
	place_cmd->add_option("--ranges", ranges_spec,
	                      "descending interceptor ranges, e.g. 80,70");
	place_cmd->add_option("--intercept-prob", intercept_prob,
	                      "intercept probability p");
	place_cmd->add_option("--strategy", strategy_id, "strategy id 1..7");
	place_cmd->add_flag("--all", all_strategies, "run strategies 1..7");

	// oracle
	auto* oracle_cmd =
	    app.add_subcommand("oracle", "exhaustive minimum-U placement");
	std::string oracle_input;
	std::string oracle_ranges = "80,70";
	double oracle_p = 0.98;
	oracle_cmd->add_option("--input", oracle_input, "network JSON")->required();
	oracle_cmd->add_option("--ranges", oracle_ranges, "descending ranges");
	oracle_cmd->add_option("--intercept-prob", oracle_p, "intercept probability");

	// experiment
	auto* exp_cmd = app.add_subcommand(
	    "experiment", "batch: generate networks, run all strategies, emit CSV");
	GenerationConfig exp_gen;
	add_generation_flags(exp_cmd, exp_gen);
	std::string betas_spec = "0.1,0.3,0.5,0.7,0.9";
	std::string inventories_spec = "80,70;110,90,80;120,110,90,80;200,120,110,90,80";
	double exp_p = 0.98;
	std::string traces_path;
	exp_cmd->add_option("--betas", betas_spec, "comma list of beta bands");
	exp_cmd->add_option("--inventories", inventories_spec,
	                    "semicolon-separated range lists");
	exp_cmd->add_option("--intercept-prob", exp_p, "intercept probability");
	exp_cmd->add_option("--traces", traces_path, "JSON sidecar with full traces");

	// regress
	auto* regress_cmd = app.add_subcommand("regress", "OLS over a results table");
	std::string fixture_name;
	std::string regress_input;
	std::string target = "omega";
	regress_cmd->add_option("--fixture", fixture_name, "named fixture: table5");
	regress_cmd->add_option("--input", regress_input, "results CSV");
	regress_cmd->add_option("--target", target, "omega|pct");

	// plotdata
	auto* plot_cmd =
	    app.add_subcommand("plotdata", "regression prediction grid as CSV");
	std::string plot_fixture;
	std::string plot_input;
	std::string plot_target = "omega";
	double dmin = 100.0, dmax = 1500.0, dstep = 50.0;
	std::string levels_spec = "150,280,400,600";
	plot_cmd->add_option("--fixture", plot_fixture, "named fixture: table5");
	plot_cmd->add_option("--input", plot_input, "results CSV");
	plot_cmd->add_option("--target", plot_target, "omega|pct");
	plot_cmd->add_option("--dmin", dmin, "grid start (km)");
	plot_cmd->add_option("--dmax", dmax, "grid end (km)");
	plot_cmd->add_option("--dstep", dstep, "grid step (km)");
	plot_cmd->add_option("--levels", levels_spec, "sum-of-ranges levels (km)");

	for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();
	CLI11_PARSE(app, argc, argv);

	auto load_rows = [&](const std::string& fixture,
	                     const std::string& path) -> std::vector<ExperimentRow> {
		if (!fixture.empty() && fixture != "table5") {
			throw ConfigError("unknown fixture: " + fixture);
		}
		if (!fixture.empty()) return table5_fixture();
		if (path.empty()) {
			throw ConfigError("need --fixture table5 or --input results.csv");
		}
		std::ifstream in(path);
		if (!in) throw ConfigError("cannot open results CSV: " + path);
		return read_rows_csv(in);
	};
	auto fit_rows = [](const std::vector<ExperimentRow>& rows,
	                   const std::string& tgt) {
		std::vector<double> y, x1, x2;
		for (const auto& r : rows) {
			if (tgt == "omega") {
				y.push_back(r.omega);
			} else if (tgt == "pct") {
				y.push_back(r.worst_case_pct);
			} else {
				throw ConfigError("target must be omega or pct");
			}
			x1.push_back(r.diameter_km);
			x2.push_back(r.sum_ranges());
		}
		return ols_fit(y, x1, x2);
	};

	if (generate_cmd->parsed()) {
		auto net = generate(gen);
		auto sw = small_worldness(net, sw_samples, gen.seed);
		NetworkMeta meta{gen.seed, gen.k, gen.beta, gen.unit_km, gen.mult_max,
		                 sw.omega};
		OutStream out(out_path);
		out.ref << network_to_json(net, meta).dump(2) << '\n';
	} else if (scores_cmd->parsed()) {
		auto net = load_network_file(input_path);
		auto dm = all_pairs_shortest_paths(net);
		OutStream out(out_path);
		write_scores_csv(out.ref, net, dm);
	} else if (place_cmd->parsed()) {
		if (!all_strategies && (strategy_id < 1 || strategy_id > 7)) {
			throw ConfigError("need --strategy 1..7 or --all");
		}
		auto net = load_network_file(place_input);
		auto dm = all_pairs_shortest_paths(net);
		BatteryInventory inv(parse_ranges(ranges_spec), intercept_prob);
		nlohmann::json j = nlohmann::json::array();
		if (all_strategies) {
			for (const auto& r : run_all(net, dm, inv)) {
				j.push_back(trace_to_json(r));
			}
		} else {
			j.push_back(trace_to_json(run_strategy(strategy_id, net, dm, inv)));
		}
		OutStream out(out_path);
		out.ref << j.dump(2) << '\n';
	} else if (oracle_cmd->parsed()) {
		auto net = load_network_file(oracle_input);
		auto dm = all_pairs_shortest_paths(net);
		BatteryInventory inv(parse_ranges(oracle_ranges), oracle_p);
		auto r = exhaustive_optimal(net, dm, inv);
		OutStream out(out_path);
		out.ref << trace_to_json(r).dump(2) << '\n';
	} else if (exp_cmd->parsed()) {
		std::vector<ExperimentConfig> configs;
		std::istringstream betas_in(betas_spec);
		std::string beta_part;
		std::vector<double> betas;
		while (std::getline(betas_in, beta_part, ',')) {
			betas.push_back(std::stod(beta_part));
		}
		std::istringstream inv_in(inventories_spec);
		std::string inv_part;
		std::vector<std::vector<double>> inventories;
		while (std::getline(inv_in, inv_part, ';')) {
			inventories.push_back(parse_ranges(inv_part));
		}
		std::uint64_t next_seed = exp_gen.seed;
		for (double beta : betas) {
			for (const auto& ranges : inventories) {
				ExperimentConfig cfg;
				cfg.gen = exp_gen;
				cfg.gen.beta = beta;
				cfg.gen.seed = next_seed++;
				cfg.inventory = BatteryInventory(ranges, exp_p);
				configs.push_back(std::move(cfg));
			}
		}
		auto output = run_experiment(configs);
		OutStream out(out_path);
		write_rows_csv(out.ref, output.rows);
		if (!traces_path.empty()) {
			nlohmann::json traces = nlohmann::json::array();
			for (const auto& r : output.results) {
				traces.push_back(trace_to_json(r));
			}
			save_json_file(traces_path, traces);
		}
	} else if (regress_cmd->parsed()) {
		auto rows = load_rows(fixture_name, regress_input);
		auto fit = fit_rows(rows, target);
		nlohmann::json j{{"target", target},
		                 {"beta0", fit.beta0},
		                 {"beta_diameter", fit.beta_diameter},
		                 {"beta_sum_ranges", fit.beta_sum_ranges},
		                 {"r_squared", fit.r_squared},
		                 {"n_obs", fit.n_obs}};
		OutStream out(out_path);
		out.ref << j.dump(2) << '\n';
	} else if (plot_cmd->parsed()) {
		auto rows = load_rows(plot_fixture, plot_input);
		auto fit = fit_rows(rows, plot_target);
		if (!(dstep > 0.0) || dmax < dmin) {
			throw ConfigError("bad diameter grid");
		}
		std::vector<double> grid;
		for (double d = dmin; d <= dmax + 1e-9; d += dstep) grid.push_back(d);
		OutStream out(out_path);
		emit_plot_data(out.ref, fit, grid, parse_ranges(levels_spec));
	}
	return 0;
}

} // namespace

int main(int argc, char** argv) {
	try {
		return run(argc, argv);
	} catch (const iads::ConfigError& e) {
		std::cerr << "config error: " << e.what() << '\n';
		return 2;
	} catch (const iads::NumericError& e) {
		std::cerr << "numeric error: " << e.what() << '\n';
		return 3;
	} catch (const std::exception& e) {
		std::cerr << "error: " << e.what() << '\n';
		return 2;
	}
}
