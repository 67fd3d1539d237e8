#pragma once

#include <span>

#include <Eigen/Dense>

#include "lambda_elim/exact.hpp"
#include "lambda_elim/params.hpp"

namespace lambda_elim {

enum class Provenance { rough, shifted, green };

// 2x2 Hermitian effective Hamiltonian on span{|a>, |b>} (units of angular
// frequency, hbar = 1), tagged with the elimination route that produced it.
struct EffectiveHamiltonian2 {
    Eigen::Matrix2cd matrix;
    Provenance provenance = Provenance::rough;
    double eta = 0.0;               // picture shift, provenance == shifted
    double reference_energy = 0.0;  // E0, provenance == green
    complexd raman_coupling{0.0, 0.0};  // Omega_R = |Omega_R| e^{i phi}

    double raman_phase() const { return std::arg(raman_coupling); }
};

// Ansatz gamma_dot = 0 in the natural picture:
//   H_eff = -hbar [ delta/2 + |Omega_a|^2/4Delta     Omega_R*/2
//                   Omega_R/2                        -delta/2 + |Omega_b|^2/4Delta ]
// with Omega_R = Omega_a Omega_b* / 2 Delta.
EffectiveHamiltonian2 rough_effective(const LambdaParams& p);

// Same Ansatz applied after shifting the energy origin by eta*Delta: the
// light shifts and the Raman coupling pick up a 1/(1+eta) factor while the
// delta terms are untouched. Throws SingularPictureError for eta = -1.
EffectiveHamiltonian2 shifted_rough_effective(const LambdaParams& p, double eta);

// Leading term of the relevant excited-state component,
//   gamma_rel = -(Omega_a/2Delta) alpha - (Omega_b/2Delta) beta.
complexd gamma_relevant(const LambdaParams& p, const State2& s);

// Exact relevant component from the mode decomposition:
//   gamma_rel(t) = gamma(t) - C3 e^{-i x3 Delta t} = sum_{k=1,2} C_k e^{-i x_k Delta t}.
complexd gamma_relevant_exact(const ModeDecomposition& d, double t);

// Closed-form two-level evolution exp(-i H t) via the identity/traceless
// split, so effective-vs-exact discrepancies measure the elimination error
// and never an integrator error.
Trajectory propagate_effective(const EffectiveHamiltonian2& h, const State2& initial,
                               std::span<const double> times);

}  // namespace lambda_elim
