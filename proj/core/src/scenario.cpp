#include "lambda_elim/scenario.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <vector>

#include "lambda_elim/analysis.hpp"
#include "lambda_elim/elim.hpp"
#include "lambda_elim/exact.hpp"
#include "lambda_elim/resolvent.hpp"

namespace lambda_elim {

namespace {

const std::set<std::string> kMethods = {"exact",   "rough",   "shifted",  "green",
                                        "compare", "scaling", "expansion"};

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("invalid numeric value for key '" + key + "': " + value);
    }
}

// 17 significant digits, enough to round-trip a double exactly.
std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.16e", v);
    return buf;
}

std::vector<double> sample_times(const ScenarioConfig& c) {
    std::vector<double> ts(c.n_samples);
    const double t_max = c.t_max_delta / std::abs(c.big_delta);
    for (int i = 0; i < c.n_samples; ++i)
        ts[i] = t_max * static_cast<double>(i) / static_cast<double>(c.n_samples - 1);
    return ts;
}

EffectiveHamiltonian2 effective_for(const ScenarioConfig& c, const LambdaParams& p) {
    if (c.method == "rough") return rough_effective(p);
    if (c.method == "green") return green_effective(p, c.e0);
    return shifted_rough_effective(p, c.eta);  // shifted and compare
}

void emit_exact_row(std::ostream& out, double t_delta, const Trajectory& tr, std::size_t i) {
    out << num(t_delta) << ',' << num(tr.alpha[i].real()) << ',' << num(tr.alpha[i].imag()) << ','
        << num(tr.beta[i].real()) << ',' << num(tr.beta[i].imag()) << ','
        << num(tr.gamma[i].real()) << ',' << num(tr.gamma[i].imag()) << ','
        << num(std::norm(tr.alpha[i])) << ',' << num(std::norm(tr.beta[i])) << ','
        << num(std::norm(tr.gamma[i])) << ',' << num(tr.norm_sq(i));
}

}  // namespace

LambdaParams ScenarioConfig::params() const {
    LambdaParams p;
    p.delta = delta;
    p.big_delta = big_delta;
    p.omega_a = std::polar(omega_a_mag, omega_a_phase);
    p.omega_b = std::polar(omega_b_mag, omega_b_phase);
    return p;
}

ScenarioConfig parse_config(const std::string& text) {
    ScenarioConfig c;
    std::set<std::string> seen;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(lineno) + ": expected key=value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        seen.insert(key);

        if (key == "delta") c.delta = parse_double(key, value);
        else if (key == "big_delta") c.big_delta = parse_double(key, value);
        else if (key == "omega_a_mag") c.omega_a_mag = parse_double(key, value);
        else if (key == "omega_a_phase") c.omega_a_phase = parse_double(key, value);
        else if (key == "omega_b_mag") c.omega_b_mag = parse_double(key, value);
        else if (key == "omega_b_phase") c.omega_b_phase = parse_double(key, value);
        else if (key == "alpha0_re") c.alpha0.real(parse_double(key, value));
        else if (key == "alpha0_im") c.alpha0.imag(parse_double(key, value));
        else if (key == "beta0_re") c.beta0.real(parse_double(key, value));
        else if (key == "beta0_im") c.beta0.imag(parse_double(key, value));
        else if (key == "gamma0_re") c.gamma0.real(parse_double(key, value));
        else if (key == "gamma0_im") c.gamma0.imag(parse_double(key, value));
        else if (key == "eta") c.eta = parse_double(key, value);
        else if (key == "e0") c.e0 = parse_double(key, value);
        else if (key == "t_max_delta") c.t_max_delta = parse_double(key, value);
        else if (key == "n_samples") c.n_samples = static_cast<int>(parse_double(key, value));
        else if (key == "method") c.method = value;
        else throw ConfigError("unknown key '" + key + "'");
    }

    for (const char* req : {"delta", "big_delta", "omega_a_mag", "omega_b_mag"})
        if (!seen.count(req)) throw ConfigError(std::string("missing required key '") + req + "'");
    if (!c.method.empty() && !kMethods.count(c.method))
        throw ConfigError("unknown method '" + c.method + "'");
    const double n2 = std::norm(c.alpha0) + std::norm(c.beta0) + std::norm(c.gamma0);
    if (std::abs(n2 - 1.0) > 1e-9)
        throw ConfigError("initial state not normalized: |alpha0|^2+|beta0|^2+|gamma0|^2 = " +
                          std::to_string(n2));
    if (c.n_samples < 2) throw ConfigError("n_samples must be >= 2");
    if (!(c.t_max_delta > 0.0)) throw ConfigError("t_max_delta must be > 0");
    return c;
}

void run_scenario(const ScenarioConfig& c, std::ostream& out, std::ostream& warn) {
    if (!kMethods.count(c.method)) throw ConfigError("unknown method '" + c.method + "'");
    const LambdaParams p = c.params();
    validate(p);
    const ReducedParams red = reduce(p);
    if (!red.within_perturbative_regime())
        warn << "warning: epsilon = " << red.epsilon
             << " > 0.2, outside the perturbative regime\n";
    if (c.method == "green" && !green_reference_in_regime(p, c.e0))
        warn << "warning: |E0| > |Delta|*epsilon, pole approximation degrades\n";

    out << "# method = " << c.method << "\n";
    out << "# epsilon = " << num(red.epsilon) << "\n";

    if (c.method == "exact") {
        const auto ts = sample_times(c);
        const Trajectory tr = propagate_exact(decompose(p, State3(c.alpha0, c.beta0, c.gamma0)), ts);
        out << "t_delta,re_alpha,im_alpha,re_beta,im_beta,re_gamma,im_gamma,pop_a,pop_b,pop_e,norm\n";
        for (std::size_t i = 0; i < ts.size(); ++i) {
            emit_exact_row(out, ts[i] * std::abs(c.big_delta), tr, i);
            out << "\n";
        }
    } else if (c.method == "rough" || c.method == "shifted" || c.method == "green") {
        if (std::abs(c.gamma0) > 1e-9)
            throw ConfigError("effective methods require gamma0 = 0");
        const auto ts = sample_times(c);
        const Trajectory tr = propagate_effective(effective_for(c, p), State2(c.alpha0, c.beta0), ts);
        out << "t_delta,re_alpha,im_alpha,re_beta,im_beta,pop_a,pop_b,norm\n";
        for (std::size_t i = 0; i < ts.size(); ++i) {
            out << num(ts[i] * std::abs(c.big_delta)) << ',' << num(tr.alpha[i].real()) << ','
                << num(tr.alpha[i].imag()) << ',' << num(tr.beta[i].real()) << ','
                << num(tr.beta[i].imag()) << ',' << num(std::norm(tr.alpha[i])) << ','
                << num(std::norm(tr.beta[i])) << ',' << num(tr.norm_sq(i)) << "\n";
        }
    } else if (c.method == "compare") {
        if (std::abs(c.gamma0) > 1e-9)
            throw ConfigError("compare requires gamma0 = 0");
        const auto ts = sample_times(c);
        const Trajectory ex = propagate_exact(decompose(p, State3(c.alpha0, c.beta0, 0.0)), ts);
        const Trajectory ef =
            c.self_check ? ex : propagate_effective(shifted_rough_effective(p, c.eta),
                                                    State2(c.alpha0, c.beta0), ts);
        out << "t_delta,re_alpha,im_alpha,re_beta,im_beta,re_gamma,im_gamma,pop_a,pop_b,pop_e,norm,"
               "eff_re_alpha,eff_im_alpha,eff_re_beta,eff_im_beta,err\n";
        for (std::size_t i = 0; i < ts.size(); ++i) {
            emit_exact_row(out, ts[i] * std::abs(c.big_delta), ex, i);
            const double err = std::sqrt(std::norm(ex.alpha[i] - ef.alpha[i]) +
                                         std::norm(ex.beta[i] - ef.beta[i]));
            out << ',' << num(ef.alpha[i].real()) << ',' << num(ef.alpha[i].imag()) << ','
                << num(ef.beta[i].real()) << ',' << num(ef.beta[i].imag()) << ',' << num(err)
                << "\n";
        }
    } else if (c.method == "scaling") {
        const double factors[] = {1.0, 0.5, 0.25};
        const ScalingFit fit = scaling_study(p, State2(c.alpha0, c.beta0), factors,
                                             shifted_method(c.eta), c.t_max_delta, c.n_samples);
        out << "epsilon,max_error\n";
        for (const auto& [eps, err] : fit.points)
            out << num(eps) << ',' << num(err) << "\n";
        out << "# slope = " << num(fit.slope) << "\n";
    } else if (c.method == "expansion") {
        const auto rows = expansion_check(p, State2(c.alpha0, c.beta0));
        out << "quantity,residual,expected_order\n";
        for (const auto& row : rows)
            out << row.quantity << ',' << num(row.residual) << ',' << row.expected_order << "\n";
    }
}

int run_scenario_cli(const ScenarioConfig& c, std::ostream& out, std::ostream& err) {
    try {
        run_scenario(c, out, err);
        return 0;
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << "\n";
        return 2;
    } catch (const InvalidRegimeError& e) {
        err << "regime error: " << e.what() << "\n";
        return 3;
    } catch (const SingularPictureError& e) {
        err << "regime error: " << e.what() << "\n";
        return 3;
    } catch (const DegenerateInputError& e) {
        err << "degeneracy: " << e.what() << "\n";
        return 4;
    } catch (const DegeneratePoleError& e) {
        err << "degeneracy: " << e.what() << "\n";
        return 4;
    } catch (const ResonanceError& e) {
        err << "degeneracy: " << e.what() << "\n";
        return 4;
    } catch (const DegenerateDataError& e) {
        err << "degeneracy: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace lambda_elim
