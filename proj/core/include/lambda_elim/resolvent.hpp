#pragma once

#include <array>

#include <Eigen/Dense>

#include "lambda_elim/elim.hpp"
#include "lambda_elim/params.hpp"

namespace lambda_elim {

// PR(z)P for the lambda system. PVP = QVQ = 0, so the whole effect of the
// eliminated level is
//   PR(z)P = (1/4) / (z - Delta) * [ |Omega_a|^2     Omega_a* Omega_b
//                                    Omega_a Omega_b*   |Omega_b|^2   ].
// Throws PoleOfDisplacementError at z = Delta.
Eigen::Matrix2cd displacement_operator(const LambdaParams& p, complexd z);

// Projected inverse resolvent M(z), defined through PG(z)P = P / M(z):
//   M(z) = z + (delta/2) sigma_z - (1/4)/(z - Delta) * W.
// A nonzero reference_energy evaluates the globally shifted problem, i.e.
// M_{E0}(z) = M(z - E0).
struct ProjectedResolvent {
    LambdaParams params;
    double reference_energy = 0.0;

    Eigen::Matrix2cd operator()(complexd z) const;
};

ProjectedResolvent projected_resolvent(const LambdaParams& p, double e0 = 0.0);

// The poles z_k = Delta * x_k of P/M(z); det M(z) = 0 reproduces the
// characteristic cubic coefficientwise.
std::array<double, 3> resolvent_poles(const LambdaParams& p);

// Residues of e^{-izt} P/M(z) at its three (simple) poles, computed in
// closed form as adj(M)/det'(M). Sum to the identity at t = 0.
struct ResidueSet {
    std::array<double, 3> poles;
    std::array<Eigen::Matrix2cd, 3> residues;
};

// Throws DegeneratePoleError when two poles coincide within 1e-10 |Delta|.
// For |delta|/(2|Delta|) below 1e-8 * max(|lambda_a|,|lambda_b|) * epsilon
// the lambda = 0 analytic branch is used (exact zero pole pinned).
ResidueSet residues(const LambdaParams& p, double t);

// PU(t)P = sum_k R_k(t); equals the (a,b) block of the exact three-level
// propagator up to floating point.
Eigen::Matrix2cd projected_propagator(const LambdaParams& p, double t);

// H_eff = PH0P + PR(E0)P; for E0 = 0 this is exactly the rough-Ansatz
// Hamiltonian. Throws PoleOfDisplacementError at E0 = Delta.
EffectiveHamiltonian2 green_effective(const LambdaParams& p, double e0 = 0.0);

// The pole approximation keeps |E0|/|Delta| = O(epsilon); validity is
// reported, never enforced.
bool green_reference_in_regime(const LambdaParams& p, double e0);

// Pole approximation M0(z) = z + (delta/2) sigma_z + W/(4 Delta): the pole
// near Delta and its residue are discarded, the other two move by O(eps^2).
struct PoleApproxResolvent {
    double delta = 0.0;
    double big_delta = 0.0;
    Eigen::Matrix2cd coupling;  // W / (4 Delta)

    Eigen::Matrix2cd operator()(complexd z) const;

    // The two roots of det M0(z) = 0, ascending; these are the eigenvalues
    // of the E0 = 0 effective Hamiltonian.
    std::array<double, 2> roots() const;
};

PoleApproxResolvent pole_approx_resolvent(const LambdaParams& p);

}  // namespace lambda_elim
