#include "lambda_elim/exact.hpp"

#include <algorithm>
#include <cmath>

namespace lambda_elim {

namespace {

// Order three real eigenfrequencies: x3 is the one nearest 1, the remaining
// two ascend. Returns indices into the input array.
std::array<int, 3> root_order(const std::array<double, 3>& x) {
    int k3 = 0;
    for (int k = 1; k < 3; ++k)
        if (std::abs(x[k] - 1.0) < std::abs(x[k3] - 1.0)) k3 = k;
    std::array<int, 3> idx{};
    int j = 0;
    for (int k = 0; k < 3; ++k)
        if (k != k3) idx[j++] = k;
    if (x[idx[0]] > x[idx[1]]) std::swap(idx[0], idx[1]);
    idx[2] = k3;
    return idx;
}

}  // namespace

Eigen::Matrix3cd build_hamiltonian(const LambdaParams& p) {
    validate(p);
    Eigen::Matrix3cd h;
    h << -0.5 * p.delta, 0.0, 0.5 * std::conj(p.omega_a),
         0.0, 0.5 * p.delta, 0.5 * std::conj(p.omega_b),
         0.5 * p.omega_a, 0.5 * p.omega_b, p.big_delta;
    return h;
}

Roots3 characteristic_roots(const ReducedParams& r) {
    // H / (hbar Delta) in the reduced variables; Hermitian, so the spectrum
    // is real by construction.
    const double mu = r.delta_sign * r.lambda * r.epsilon;  // delta / (2 Delta)
    Eigen::Matrix3cd hx;
    hx << -mu, 0.0, std::conj(r.lambda_a) * r.epsilon,
          0.0, mu, std::conj(r.lambda_b) * r.epsilon,
          r.lambda_a * r.epsilon, r.lambda_b * r.epsilon, 1.0;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3cd> es(hx, Eigen::EigenvaluesOnly);
    std::array<double, 3> x{es.eigenvalues()(0), es.eigenvalues()(1), es.eigenvalues()(2)};
    const auto idx = root_order(x);
    return {x[idx[0]], x[idx[1]], x[idx[2]]};
}

std::array<double, 3> characteristic_cubic(const ReducedParams& r) {
    const double mu = r.delta_sign * r.lambda * r.epsilon;
    const double pa = std::norm(r.lambda_a) * r.epsilon * r.epsilon;
    const double pb = std::norm(r.lambda_b) * r.epsilon * r.epsilon;
    const double c2 = -1.0;
    const double c1 = -(mu * mu + pa + pb);
    const double c0 = mu * mu + mu * (pa - pb);
    return {c2, c1, c0};
}

Roots3 characteristic_roots_companion(const ReducedParams& r) {
    const auto c = characteristic_cubic(r);
    Eigen::Matrix3d companion;
    companion << 0.0, 0.0, -c[2],
                 1.0, 0.0, -c[1],
                 0.0, 1.0, -c[0];
    Eigen::EigenSolver<Eigen::Matrix3d> es(companion, false);
    std::array<double, 3> x{};
    for (int k = 0; k < 3; ++k) x[k] = es.eigenvalues()(k).real();
    const auto idx = root_order(x);
    return {x[idx[0]], x[idx[1]], x[idx[2]]};
}

ModeDecomposition decompose(const LambdaParams& p, const State3& initial) {
    const Eigen::Matrix3cd h = build_hamiltonian(p);
    // Near-degenerate eigenvalues are unproblematic: the solver always
    // returns an orthonormal eigenbasis of the Hermitian matrix.
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3cd> es(h);

    std::array<double, 3> x{};
    for (int k = 0; k < 3; ++k) x[k] = es.eigenvalues()(k) / p.big_delta;
    const auto idx = root_order(x);

    Eigen::Vector3cd psi0(initial.alpha, initial.beta, initial.gamma);
    ModeDecomposition d;
    d.big_delta = p.big_delta;
    for (int k = 0; k < 3; ++k) {
        const Eigen::Vector3cd v = es.eigenvectors().col(idx[k]);
        const complexd c = v.adjoint() * psi0;
        d.roots[k] = x[idx[k]];
        d.coef_a[k] = v(0) * c;
        d.coef_b[k] = v(1) * c;
        d.coef_c[k] = v(2) * c;
    }
    return d;
}

double Trajectory::norm_sq(std::size_t i) const {
    double n = std::norm(alpha[i]) + std::norm(beta[i]);
    if (three_level()) n += std::norm(gamma[i]);
    return n;
}

double Trajectory::max_norm_deviation() const {
    double m = 0.0;
    for (std::size_t i = 0; i < times.size(); ++i)
        m = std::max(m, std::abs(norm_sq(i) - 1.0));
    return m;
}

Trajectory propagate_exact(const ModeDecomposition& d, std::span<const double> times) {
    Trajectory tr;
    tr.times.assign(times.begin(), times.end());
    tr.alpha.reserve(times.size());
    tr.beta.reserve(times.size());
    tr.gamma.reserve(times.size());
    const complexd mi(0.0, -1.0);
    for (double t : times) {
        complexd a = 0.0, b = 0.0, c = 0.0;
        for (int k = 0; k < 3; ++k) {
            const complexd ph = std::exp(mi * (d.big_delta * d.roots[k] * t));
            a += d.coef_a[k] * ph;
            b += d.coef_b[k] * ph;
            c += d.coef_c[k] * ph;
        }
        tr.alpha.push_back(a);
        tr.beta.push_back(b);
        tr.gamma.push_back(c);
    }
    return tr;
}

}  // namespace lambda_elim
