#pragma once

#include <iosfwd>
#include <string>

#include "lambda_elim/params.hpp"

namespace lambda_elim {

// One simulation scenario, parsed from a key=value config file. Angles are
// radians; the time window is t_max_delta in units of 1/|Delta|.
struct ScenarioConfig {
    double delta = 0.0;
    double big_delta = 0.0;
    double omega_a_mag = 0.0;
    double omega_a_phase = 0.0;
    double omega_b_mag = 0.0;
    double omega_b_phase = 0.0;
    complexd alpha0{0.0, 0.0};
    complexd beta0{0.0, 0.0};
    complexd gamma0{0.0, 0.0};
    double eta = 0.0;
    double e0 = 0.0;
    double t_max_delta = 200.0;
    int n_samples = 2001;
    std::string method;  // exact | rough | shifted | green | compare | scaling | expansion
    bool self_check = false;

    LambdaParams params() const;
};

// Parses the documented key=value format (one pair per line, '#' comments).
// Throws ConfigError on unknown keys, missing required keys (delta,
// big_delta, omega_a_mag, omega_b_mag, method) or an unnormalized initial
// state.
ScenarioConfig parse_config(const std::string& text);

// Runs the configured pipeline and streams CSV to `out` (header row, '#'
// comment/footer lines, every float printed with 17 significant digits so
// identical configs give byte-identical output). Diagnostics go to `warn`.
void run_scenario(const ScenarioConfig& c, std::ostream& out, std::ostream& warn);

// Exception-to-exit-code wrapper for the CLI: 0 ok, 2 config error,
// 3 regime error (Delta = 0, eta = -1), 4 numerical degeneracy, 1 anything
// else.
int run_scenario_cli(const ScenarioConfig& c, std::ostream& out, std::ostream& err);

}  // namespace lambda_elim
