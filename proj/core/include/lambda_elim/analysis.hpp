#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "lambda_elim/elim.hpp"
#include "lambda_elim/exact.hpp"
#include "lambda_elim/params.hpp"

namespace lambda_elim {

// Closed-form solution of the two-frequency driven mode equation
//   i f'(t) +/- (delta/2) f = (Omega/2) (A_omega e^{-i omega t} + A_Delta e^{-i Delta t}).
// sign is +1 or -1 and selects the +/- branch. Throws ResonanceError when a
// driven denominator 2 omega +/- delta or 2 Delta +/- delta vanishes (only
// checked when the corresponding drive is actually present).
complexd driven_mode_solution(complexd f0, int sign, double delta, complexd omega_coupling,
                              complexd a_omega, double omega, complexd a_delta,
                              double big_delta, double t);

// Max-over-time discrepancy between a reference and a test trajectory.
struct ErrorReport {
    double max_amplitude_error = 0.0;   // Euclidean distance of amplitude vectors
    double max_population_error = 0.0;  // worst | |.|^2 - |.|^2 |
    double time_of_max = 0.0;
    double epsilon = 0.0;
    std::string reference_method;
    std::string test_method;
};

// Compares (alpha, beta) pointwise on identical time grids; the test
// trajectory is multiplied by e^{-i phase_rate t} first, which aligns an
// eta-shifted picture (phase_rate = eta*Delta) with the natural one.
// Symmetric in its arguments up to labeling.
ErrorReport compare_trajectories(const Trajectory& reference, const Trajectory& test,
                                 const LambdaParams& p, double phase_rate = 0.0);

// log-log least-squares fit of error versus epsilon.
struct ScalingFit {
    std::vector<std::pair<double, double>> points;  // (epsilon, max error)
    double slope = 0.0;
    double intercept = 0.0;
    double residual = 0.0;  // rms of the fit residuals in log space
};

using EffectiveMethod = std::function<EffectiveHamiltonian2(const LambdaParams&)>;

EffectiveMethod rough_method();
EffectiveMethod shifted_method(double eta);
EffectiveMethod green_method(double e0);

// Scales (delta, Omega_a, Omega_b) by each factor in (0, 1], holding Delta
// fixed so epsilon scales proportionally, then fits the slope of the max
// amplitude error of `method` against the exact dynamics. Needs at least
// three factors; throws DegenerateDataError when every error vanishes.
ScalingFit scaling_study(const LambdaParams& base, const State2& initial,
                         std::span<const double> scale_factors, const EffectiveMethod& method,
                         double t_max_delta = 200.0, int n_samples = 2001);

// One row of the leading-order expansion table: the measured residual of a
// numerically computed root or coefficient against its leading-order
// prediction, with the order of the expected remainder.
struct ExpansionResidual {
    std::string quantity;
    double residual = 0.0;
    int expected_order = 2;  // residual is O(epsilon^expected_order)
    bool exact_zero = false;  // entry is an exact invariant, not an expansion
};

// Evaluates the applicable branch (lambda = 0 or lambda != 0) for the state
// alpha0 |a> + beta0 |b>.
std::vector<ExpansionResidual> expansion_check(const LambdaParams& p, const State2& initial);

// Canonical order check: a claimed O(eps^n) residual must shrink by at least
// 2^n (within `tol` slack) per halving of epsilon; two_sided additionally
// rejects residuals shrinking faster than 2^n (1 + tol). Residuals below
// 1e-13 are treated as exact and pass.
struct RatioTestResult {
    bool pass = false;
    std::vector<double> ratios;
};

RatioTestResult ratio_test(std::span<const double> residuals, int order, bool two_sided = false,
                           double tol = 0.25);

}  // namespace lambda_elim
