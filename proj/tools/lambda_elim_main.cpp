// lambda-elim: simulate a laser-driven lambda system and its two-level
// effective dynamics, emitting CSV suitable for any external plotter.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "lambda_elim/scenario.hpp"

int main(int argc, char** argv) {
    CLI::App app{"adiabatic elimination in a driven lambda system"};

    std::string method;
    std::string config_path;
    std::string out_path;
    double eta = 0.0, e0 = 0.0;
    bool self_check = false;

    app.add_option("method", method, "exact | rough | shifted | green | compare | scaling | expansion")
        ->required();
    app.add_option("--config", config_path, "scenario config file (key=value lines)")->required();
    app.add_option("--out", out_path, "output CSV path (default: stdout)");
    auto* eta_opt = app.add_option("--eta", eta, "picture shift, overrides config");
    auto* e0_opt = app.add_option("--e0", e0, "reference energy E0, overrides config");
    app.add_flag("--self-check", self_check, "compare exact against itself (error column all zero)");

    CLI11_PARSE(app, argc, argv);

    std::ifstream in(config_path);
    if (!in) {
        std::cerr << "config error: cannot open " << config_path << "\n";
        return 2;
    }
    std::stringstream buf;
    buf << in.rdbuf();

    lambda_elim::ScenarioConfig config;
    try {
        config = lambda_elim::parse_config(buf.str());
    } catch (const std::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    }

    // flags override config keys
    config.method = method;
    if (*eta_opt) config.eta = eta;
    if (*e0_opt) config.e0 = e0;
    if (self_check) config.self_check = true;

    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "config error: cannot open " << out_path << " for writing\n";
            return 2;
        }
        return lambda_elim::run_scenario_cli(config, out, std::cerr);
    }
    return lambda_elim::run_scenario_cli(config, std::cout, std::cerr);
}
