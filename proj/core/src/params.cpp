#include "lambda_elim/params.hpp"

#include <algorithm>
#include <cmath>

namespace lambda_elim {

void validate(const LambdaParams& p) {
    if (p.big_delta == 0.0)
        throw InvalidRegimeError("big_delta must be nonzero (elimination regime requires a common detuning)");
    if (p.delta_a.has_value() != p.delta_b.has_value())
        throw std::invalid_argument("delta_a and delta_b must be supplied together");
    if (p.delta_a) {
        const double tol = 1e-12 * std::abs(p.big_delta);
        if (std::abs(p.delta - (*p.delta_a - *p.delta_b)) > tol ||
            std::abs(p.big_delta - 0.5 * (*p.delta_a + *p.delta_b)) > tol)
            throw std::invalid_argument("(delta_a, delta_b) inconsistent with (delta, big_delta)");
    }
}

ReducedParams reduce(const LambdaParams& p) {
    validate(p);
    const double m = std::max({std::abs(p.delta), std::abs(p.omega_a), std::abs(p.omega_b)});
    if (m == 0.0)
        throw DegenerateInputError("delta = Omega_a = Omega_b = 0: no smallness parameter");

    ReducedParams r;
    r.epsilon = m / (2.0 * std::abs(p.big_delta));
    r.lambda = std::abs(p.delta) / m;  // = |delta| / (2 |Delta| eps)
    // 2 Delta eps = m * sign(Delta)
    const double sd = p.big_delta > 0.0 ? 1.0 : -1.0;
    r.lambda_a = p.omega_a * (sd / m);
    r.lambda_b = p.omega_b * (sd / m);
    r.delta_sign = (p.delta == 0.0) ? 1 : (p.delta * p.big_delta > 0.0 ? 1 : -1);
    return r;
}

LambdaParams expand(const ReducedParams& r, double big_delta) {
    LambdaParams p;
    p.big_delta = big_delta;
    const double two_delta_eps = 2.0 * big_delta * r.epsilon;
    p.delta = r.delta_sign * r.lambda * two_delta_eps;
    p.omega_a = r.lambda_a * two_delta_eps;
    p.omega_b = r.lambda_b * two_delta_eps;
    return p;
}

namespace {
void check_norm(double n2) {
    if (std::abs(n2 - 1.0) > 1e-9)
        throw std::invalid_argument("state amplitudes are not normalized");
}
}  // namespace

State3::State3(complexd a, complexd b, complexd c) : alpha(a), beta(b), gamma(c) {
    check_norm(norm_sq());
}

double State3::norm_sq() const {
    return std::norm(alpha) + std::norm(beta) + std::norm(gamma);
}

State2::State2(complexd a, complexd b) : alpha(a), beta(b) {
    check_norm(norm_sq());
}

double State2::norm_sq() const { return std::norm(alpha) + std::norm(beta); }

}  // namespace lambda_elim
