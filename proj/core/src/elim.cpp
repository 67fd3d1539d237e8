#include "lambda_elim/elim.hpp"

#include <cmath>

namespace lambda_elim {

namespace {

EffectiveHamiltonian2 build_rough(const LambdaParams& p, double shift_scale) {
    // shift_scale = 1/(1+eta): scales the light shifts and the Raman
    // coupling, leaves the bare splitting alone.
    const double ls_a = std::norm(p.omega_a) / (4.0 * p.big_delta) * shift_scale;
    const double ls_b = std::norm(p.omega_b) / (4.0 * p.big_delta) * shift_scale;
    const complexd omega_r = p.omega_a * std::conj(p.omega_b) / (2.0 * p.big_delta) * shift_scale;

    EffectiveHamiltonian2 h;
    h.matrix << -(0.5 * p.delta + ls_a), -0.5 * std::conj(omega_r),
                -0.5 * omega_r, -(-0.5 * p.delta + ls_b);
    h.raman_coupling = omega_r;
    return h;
}

}  // namespace

EffectiveHamiltonian2 rough_effective(const LambdaParams& p) {
    validate(p);
    EffectiveHamiltonian2 h = build_rough(p, 1.0);
    h.provenance = Provenance::rough;
    return h;
}

EffectiveHamiltonian2 shifted_rough_effective(const LambdaParams& p, double eta) {
    validate(p);
    if (std::abs(1.0 + eta) < 1e-12)
        throw SingularPictureError("eta = -1: shifted picture is singular");
    EffectiveHamiltonian2 h = build_rough(p, 1.0 / (1.0 + eta));
    h.provenance = Provenance::shifted;
    h.eta = eta;
    return h;
}

complexd gamma_relevant(const LambdaParams& p, const State2& s) {
    validate(p);
    return -(p.omega_a * s.alpha + p.omega_b * s.beta) / (2.0 * p.big_delta);
}

complexd gamma_relevant_exact(const ModeDecomposition& d, double t) {
    const complexd mi(0.0, -1.0);
    complexd g = 0.0;
    for (int k = 0; k < 2; ++k)
        g += d.coef_c[k] * std::exp(mi * (d.big_delta * d.roots[k] * t));
    return g;
}

Trajectory propagate_effective(const EffectiveHamiltonian2& h, const State2& initial,
                               std::span<const double> times) {
    // Pauli split H = c0 + hx sx + hy sy + hz sz, then
    // U(t) = e^{-i c0 t} (cos(w t) - i sin(w t) (h.sigma)/w).
    const double c0 = 0.5 * (h.matrix(0, 0).real() + h.matrix(1, 1).real());
    const double hz = 0.5 * (h.matrix(0, 0).real() - h.matrix(1, 1).real());
    const double hx = h.matrix(1, 0).real();
    const double hy = h.matrix(1, 0).imag();
    const double w = std::sqrt(hx * hx + hy * hy + hz * hz);

    Trajectory tr;
    tr.times.assign(times.begin(), times.end());
    tr.alpha.reserve(times.size());
    tr.beta.reserve(times.size());
    const complexd i1(0.0, 1.0);
    for (double t : times) {
        const complexd global = std::exp(-i1 * (c0 * t));
        double cwt = std::cos(w * t);
        double swt_w = w > 0.0 ? std::sin(w * t) / w : t;  // sinc limit at w = 0
        const complexd u00 = global * (cwt - i1 * swt_w * hz);
        const complexd u01 = global * (-i1 * swt_w * (hx - i1 * hy));
        const complexd u10 = global * (-i1 * swt_w * (hx + i1 * hy));
        const complexd u11 = global * (cwt + i1 * swt_w * hz);
        tr.alpha.push_back(u00 * initial.alpha + u01 * initial.beta);
        tr.beta.push_back(u10 * initial.alpha + u11 * initial.beta);
    }
    return tr;
}

}  // namespace lambda_elim
