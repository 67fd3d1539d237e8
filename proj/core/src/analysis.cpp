#include "lambda_elim/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "lambda_elim/resolvent.hpp"

namespace lambda_elim {

complexd driven_mode_solution(complexd f0, int sign, double delta, complexd omega_coupling,
                              complexd a_omega, double omega, complexd a_delta,
                              double big_delta, double t) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
    const double s = static_cast<double>(sign);
    const double den_omega = 2.0 * omega + s * delta;
    const double den_delta = 2.0 * big_delta + s * delta;
    const double scale =
        std::max({2.0 * std::abs(omega), 2.0 * std::abs(big_delta), std::abs(delta), 1.0});
    const bool drive_omega = omega_coupling != 0.0 && a_omega != 0.0;
    const bool drive_delta = omega_coupling != 0.0 && a_delta != 0.0;
    if (drive_omega && std::abs(den_omega) < 1e-12 * scale)
        throw ResonanceError("resonant drive: 2*omega +/- delta = 0");
    if (drive_delta && std::abs(den_delta) < 1e-12 * scale)
        throw ResonanceError("resonant drive: 2*Delta +/- delta = 0");

    const complexd mi(0.0, -1.0);
    const complexd eh = std::exp(complexd(0.0, s * 0.5 * delta * t));
    complexd f = f0 * eh;
    if (drive_omega)
        f += omega_coupling * a_omega / den_omega * (std::exp(mi * (omega * t)) - eh);
    if (drive_delta)
        f += omega_coupling * a_delta / den_delta * (std::exp(mi * (big_delta * t)) - eh);
    return f;
}

ErrorReport compare_trajectories(const Trajectory& reference, const Trajectory& test,
                                 const LambdaParams& p, double phase_rate) {
    if (reference.times.size() != test.times.size() ||
        !std::equal(reference.times.begin(), reference.times.end(), test.times.begin()))
        throw GridMismatchError("trajectories sampled on different time grids");

    ErrorReport rep;
    rep.epsilon = reduce(p).epsilon;
    rep.reference_method = "reference";
    rep.test_method = "test";
    for (std::size_t i = 0; i < reference.times.size(); ++i) {
        const double t = reference.times[i];
        const complexd ph = std::exp(complexd(0.0, -phase_rate * t));
        const complexd da = reference.alpha[i] - test.alpha[i] * ph;
        const complexd db = reference.beta[i] - test.beta[i] * ph;
        const double amp = std::sqrt(std::norm(da) + std::norm(db));
        const double pop =
            std::max(std::abs(std::norm(reference.alpha[i]) - std::norm(test.alpha[i])),
                     std::abs(std::norm(reference.beta[i]) - std::norm(test.beta[i])));
        if (amp > rep.max_amplitude_error) {
            rep.max_amplitude_error = amp;
            rep.time_of_max = t;
        }
        rep.max_population_error = std::max(rep.max_population_error, pop);
    }
    return rep;
}

EffectiveMethod rough_method() {
    return [](const LambdaParams& p) { return rough_effective(p); };
}

EffectiveMethod shifted_method(double eta) {
    return [eta](const LambdaParams& p) { return shifted_rough_effective(p, eta); };
}

EffectiveMethod green_method(double e0) {
    return [e0](const LambdaParams& p) { return green_effective(p, e0); };
}

namespace {

std::vector<double> time_grid(double big_delta, double t_max_delta, int n_samples) {
    std::vector<double> ts(n_samples);
    const double t_max = t_max_delta / std::abs(big_delta);
    for (int i = 0; i < n_samples; ++i)
        ts[i] = t_max * static_cast<double>(i) / static_cast<double>(n_samples - 1);
    return ts;
}

}  // namespace

ScalingFit scaling_study(const LambdaParams& base, const State2& initial,
                         std::span<const double> scale_factors, const EffectiveMethod& method,
                         double t_max_delta, int n_samples) {
    if (scale_factors.size() < 3)
        throw std::invalid_argument("scaling_study needs at least 3 scale factors");
    validate(base);

    ScalingFit fit;
    const State3 psi0(initial.alpha, initial.beta, 0.0);
    const auto ts = time_grid(base.big_delta, t_max_delta, n_samples);
    for (double s : scale_factors) {
        if (!(s > 0.0 && s <= 1.0))
            throw std::invalid_argument("scale factors must lie in (0, 1]");
        LambdaParams p = base;
        p.delta *= s;
        p.omega_a *= s;
        p.omega_b *= s;
        p.delta_a.reset();
        p.delta_b.reset();
        const Trajectory ex = propagate_exact(decompose(p, psi0), ts);
        const Trajectory ef = propagate_effective(method(p), initial, ts);
        const ErrorReport rep = compare_trajectories(ex, ef, p);
        fit.points.emplace_back(rep.epsilon, rep.max_amplitude_error);
    }

    bool all_zero = true;
    for (const auto& [eps, err] : fit.points)
        if (err > 1e-14) all_zero = false;
    if (all_zero) throw DegenerateDataError("all scaling errors vanish; slope fit is meaningless");

    // least squares on (log eps, log err)
    const double n = static_cast<double>(fit.points.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [eps, err] : fit.points) {
        const double x = std::log(eps), y = std::log(std::max(err, 1e-300));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    fit.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    fit.intercept = (sy - fit.slope * sx) / n;
    double ss = 0.0;
    for (const auto& [eps, err] : fit.points) {
        const double r = std::log(std::max(err, 1e-300)) - fit.slope * std::log(eps) - fit.intercept;
        ss += r * r;
    }
    fit.residual = std::sqrt(ss / n);
    return fit;
}

namespace {

void push(std::vector<ExpansionResidual>& out, const std::string& name, complexd computed,
          complexd predicted, int order, bool exact_zero = false) {
    out.push_back({name, std::abs(computed - predicted), order, exact_zero});
}

}  // namespace

std::vector<ExpansionResidual> expansion_check(const LambdaParams& p, const State2& initial) {
    const ReducedParams r = reduce(p);
    const ModeDecomposition d = decompose(p, State3(initial.alpha, initial.beta, 0.0));
    const double eps = r.epsilon;

    // For delta/(2 Delta) < 0 the system maps onto the delta > 0 one with the
    // two ground states relabelled, so swap (a, b) in both the couplings and
    // the coefficients before applying the table.
    complexd la = r.lambda_a, lb = r.lambda_b;
    complexd a0 = initial.alpha, b0 = initial.beta;
    auto ca = d.coef_a, cb = d.coef_b;
    if (r.delta_sign < 0) {
        std::swap(la, lb);
        std::swap(a0, b0);
        std::swap(ca, cb);
    }
    const auto& cc = d.coef_c;

    std::vector<ExpansionResidual> out;
    const double p2 = std::norm(la) + std::norm(lb);
    if (r.lambda < 1e-12) {
        // dark-state branch
        push(out, "x1", d.roots[0], 0.0, 2);
        push(out, "x2", d.roots[1], 0.0, 0, true);
        push(out, "x3", d.roots[2], 1.0, 2);
        push(out, "A1", ca[0], (a0 * std::norm(la) + b0 * std::conj(la) * lb) / p2, 2);
        push(out, "A2", ca[1], (a0 * std::norm(lb) - std::conj(la) * lb * b0) / p2, 2);
        push(out, "A3", ca[2], 0.0, 2);
        push(out, "B1", cb[0], (a0 * la * std::conj(lb) + b0 * std::norm(lb)) / p2, 2);
        push(out, "B2", cb[1], (-la * std::conj(lb) * a0 + std::norm(la) * b0) / p2, 2);
        push(out, "B3", cb[2], 0.0, 2);
        push(out, "C1", cc[0], -(la * a0 + lb * b0) * eps, 2);
        push(out, "C2", cc[1], 0.0, 0, true);
        push(out, "C3", cc[2], (la * a0 + lb * b0) * eps, 2);
    } else {
        const complexd cross_a = b0 * std::conj(la) * lb / (2.0 * r.lambda) * eps;
        const complexd cross_b = a0 * la * std::conj(lb) / (2.0 * r.lambda) * eps;
        push(out, "x1", d.roots[0], -r.lambda * eps, 2);
        push(out, "x2", d.roots[1], r.lambda * eps, 2);
        push(out, "x3", d.roots[2], 1.0, 2);
        push(out, "A1", ca[0], a0 + cross_a, 2);
        push(out, "A2", ca[1], -cross_a, 2);
        push(out, "A3", ca[2], 0.0, 2);
        push(out, "B1", cb[0], cross_b, 2);
        push(out, "B2", cb[1], b0 - cross_b, 2);
        push(out, "B3", cb[2], 0.0, 2);
        push(out, "C1", cc[0], -la * a0 * eps, 2);
        push(out, "C2", cc[1], -lb * b0 * eps, 2);
        push(out, "C3", cc[2], (la * a0 + lb * b0) * eps, 2);
    }
    return out;
}

RatioTestResult ratio_test(std::span<const double> residuals, int order, bool two_sided,
                           double tol) {
    if (residuals.size() < 2) throw std::invalid_argument("ratio_test needs >= 2 residuals");
    RatioTestResult res;
    res.pass = true;
    const double expected = std::pow(2.0, order);
    for (std::size_t i = 0; i + 1 < residuals.size(); ++i) {
        if (residuals[i] < 1e-13 && residuals[i + 1] < 1e-13) {
            res.ratios.push_back(0.0);  // exact to working precision
            continue;
        }
        const double ratio = residuals[i] / residuals[i + 1];
        res.ratios.push_back(ratio);
        if (ratio < expected * (1.0 - tol)) res.pass = false;
        if (two_sided && ratio > expected * (1.0 + tol)) res.pass = false;
    }
    return res;
}

}  // namespace lambda_elim
