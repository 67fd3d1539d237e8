#include "lambda_elim/resolvent.hpp"

#include <algorithm>
#include <cmath>

#include "lambda_elim/exact.hpp"

namespace lambda_elim {

namespace {

// W = [ |Omega_a|^2, Omega_a* Omega_b ; Omega_a Omega_b*, |Omega_b|^2 ]
Eigen::Matrix2cd coupling_matrix(const LambdaParams& p) {
    Eigen::Matrix2cd w;
    w << std::norm(p.omega_a), std::conj(p.omega_a) * p.omega_b,
         p.omega_a * std::conj(p.omega_b), std::norm(p.omega_b);
    return w;
}

// Characteristic cubic in energy units, c(z) = det(z - H) = det M(z) (z - Delta).
struct Cubic {
    double c2, c1, c0;
    double eval(double z) const { return ((z + c2) * z + c1) * z + c0; }
    double deriv(double z) const { return (3.0 * z + 2.0 * c2) * z + c1; }
};

Cubic energy_cubic(const LambdaParams& p) {
    const double w11 = 0.25 * std::norm(p.omega_a);
    const double w22 = 0.25 * std::norm(p.omega_b);
    const double d2 = 0.25 * p.delta * p.delta;
    return {-p.big_delta, -(d2 + w11 + w22),
            p.big_delta * d2 + 0.5 * p.delta * (w11 - w22)};
}

Eigen::Matrix2cd adjugate(const Eigen::Matrix2cd& m) {
    Eigen::Matrix2cd a;
    a << m(1, 1), -m(0, 1), -m(1, 0), m(0, 0);
    return a;
}

Eigen::Matrix2cd m_of_z(const LambdaParams& p, complexd z) {
    Eigen::Matrix2cd m = z * Eigen::Matrix2cd::Identity();
    m(0, 0) += 0.5 * p.delta;
    m(1, 1) -= 0.5 * p.delta;
    const Eigen::Matrix2cd w = coupling_matrix(p);
    // skip the pole term when the lasers are off, so the spurious root the
    // cubic keeps at z = Delta does not turn 0 * inf into NaN
    if (w(0, 0).real() + w(1, 1).real() > 0.0) m -= w * (0.25 / (z - p.big_delta));
    return m;
}

}  // namespace

Eigen::Matrix2cd displacement_operator(const LambdaParams& p, complexd z) {
    validate(p);
    if (std::abs(z - p.big_delta) <= 1e-12 * std::max(std::abs(z), std::abs(p.big_delta)))
        throw PoleOfDisplacementError("R(z) has a pole at z = Delta");
    return coupling_matrix(p) * (0.25 / (z - p.big_delta));
}

Eigen::Matrix2cd ProjectedResolvent::operator()(complexd z) const {
    const complexd zr = z - reference_energy;
    if (std::abs(zr - params.big_delta) <=
        1e-12 * std::max(std::abs(zr), std::abs(params.big_delta)))
        throw PoleOfDisplacementError("M(z) undefined at the excited pole");
    return m_of_z(params, zr);
}

ProjectedResolvent projected_resolvent(const LambdaParams& p, double e0) {
    validate(p);
    return {p, e0};
}

std::array<double, 3> resolvent_poles(const LambdaParams& p) {
    validate(p);
    ReducedParams r;  // all-zero couplings: poles {0, 0, Delta}
    const double m = std::max({std::abs(p.delta), std::abs(p.omega_a), std::abs(p.omega_b)});
    if (m > 0.0) r = reduce(p);
    const Roots3 x = characteristic_roots(r);
    return {p.big_delta * x.x1, p.big_delta * x.x2, p.big_delta * x.x3};
}

ResidueSet residues(const LambdaParams& p, double t) {
    validate(p);
    const ReducedParams red = reduce(p);

    LambdaParams pp = p;
    std::array<double, 3> z{};
    const double lam_scale = std::max(std::abs(red.lambda_a), std::abs(red.lambda_b));
    // |delta|/(2|Delta|) = lambda * eps below 1e-8 * max(|lambda_a|,|lambda_b|) * eps
    if (red.lambda < 1e-8 * lam_scale) {
        // lambda = 0 analytic branch: z = 0 is an exact pole, the other two
        // come from the quadratic x^2 - x - p eps^2 = 0.
        pp.delta = 0.0;
        pp.delta_a.reset();
        pp.delta_b.reset();
        const double peps2 =
            (std::norm(pp.omega_a) + std::norm(pp.omega_b)) / (4.0 * pp.big_delta * pp.big_delta);
        const double s = std::sqrt(1.0 + 4.0 * peps2);
        z = {pp.big_delta * 0.5 * (1.0 - s), 0.0, pp.big_delta * 0.5 * (1.0 + s)};
    } else {
        z = resolvent_poles(pp);
    }

    const double gap_tol = 1e-10 * std::abs(pp.big_delta);
    if (std::abs(z[0] - z[1]) < gap_tol || std::abs(z[0] - z[2]) < gap_tol ||
        std::abs(z[1] - z[2]) < gap_tol)
        throw DegeneratePoleError(
            "coincident resolvent poles; use the lambda = 0 analytic branch at larger coupling");

    const Cubic c = energy_cubic(pp);
    ResidueSet rs;
    rs.poles = z;
    const complexd mi(0.0, -1.0);
    for (int k = 0; k < 3; ++k) {
        // Res_k of e^{-izt}/M(z): M^{-1} = adj(M) (z - Delta) / c(z),
        // so the residue is adj(M(z_k)) (z_k - Delta) / c'(z_k).
        const Eigen::Matrix2cd m = m_of_z(pp, z[k]);
        rs.residues[k] =
            std::exp(mi * (z[k] * t)) * adjugate(m) * ((z[k] - pp.big_delta) / c.deriv(z[k]));
    }
    return rs;
}

Eigen::Matrix2cd projected_propagator(const LambdaParams& p, double t) {
    const ResidueSet rs = residues(p, t);
    return rs.residues[0] + rs.residues[1] + rs.residues[2];
}

EffectiveHamiltonian2 green_effective(const LambdaParams& p, double e0) {
    validate(p);
    const Eigen::Matrix2cd pr = displacement_operator(p, e0);
    EffectiveHamiltonian2 h;
    h.matrix = pr;
    h.matrix(0, 0) += -0.5 * p.delta;
    h.matrix(1, 1) += 0.5 * p.delta;
    h.provenance = Provenance::green;
    h.reference_energy = e0;
    h.raman_coupling = -2.0 * h.matrix(1, 0);
    return h;
}

bool green_reference_in_regime(const LambdaParams& p, double e0) {
    const ReducedParams r = reduce(p);
    return std::abs(e0) <= std::abs(p.big_delta) * r.epsilon;
}

Eigen::Matrix2cd PoleApproxResolvent::operator()(complexd z) const {
    Eigen::Matrix2cd m = z * Eigen::Matrix2cd::Identity();
    m(0, 0) += 0.5 * delta;
    m(1, 1) -= 0.5 * delta;
    m += coupling;
    return m;
}

std::array<double, 2> PoleApproxResolvent::roots() const {
    // det M0(z) = 0  <=>  z is an eigenvalue of -( (delta/2) sigma_z + W/4Delta ).
    const double a = -(0.5 * delta + coupling(0, 0).real());
    const double d = -(-0.5 * delta + coupling(1, 1).real());
    const double off = std::abs(coupling(0, 1));
    const double mid = 0.5 * (a + d);
    const double rad = std::sqrt(0.25 * (a - d) * (a - d) + off * off);
    return {mid - rad, mid + rad};
}

PoleApproxResolvent pole_approx_resolvent(const LambdaParams& p) {
    validate(p);
    return {p.delta, p.big_delta, coupling_matrix(p) * (0.25 / p.big_delta)};
}

}  // namespace lambda_elim
