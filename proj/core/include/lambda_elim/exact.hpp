#pragma once

#include <array>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "lambda_elim/params.hpp"

namespace lambda_elim {

// Rotating-frame Hamiltonian divided by hbar:
//   [ -delta/2      0        Omega_a*/2 ]
//   [    0       delta/2     Omega_b*/2 ]
//   [ Omega_a/2  Omega_b/2     Delta    ]
Eigen::Matrix3cd build_hamiltonian(const LambdaParams& p);

// The three real dimensionless eigenfrequencies x_k = E_k / (hbar Delta),
// ordered so that x3 is the root nearest 1 and x1 <= x2.
struct Roots3 {
    double x1, x2, x3;
};

// Primary path: eigenvalues of the Hermitian 3x3 matrix (stable near the
// lambda -> 0 degeneracy).
Roots3 characteristic_roots(const ReducedParams& r);

// Coefficients {c2, c1, c0} of the characteristic cubic
// x^3 + c2 x^2 + c1 x + c0 = 0 in the reduced variables.
std::array<double, 3> characteristic_cubic(const ReducedParams& r);

// Cross-check path: the same roots from the explicit cubic via its companion
// matrix (avoids the cancellation a Cardano evaluation would hit).
Roots3 characteristic_roots_companion(const ReducedParams& r);

// Fourier decomposition of the exact solution:
//   alpha(t) = sum_k A_k exp(-i Delta x_k t), same for beta (B_k) and
//   gamma (C_k). Coefficients come from projecting the initial state onto
// the eigenvectors of the Hamiltonian.
struct ModeDecomposition {
    std::array<double, 3> roots;  // x1, x2, x3, ordered as in Roots3
    std::array<complexd, 3> coef_a;
    std::array<complexd, 3> coef_b;
    std::array<complexd, 3> coef_c;
    double big_delta = 0.0;
};

ModeDecomposition decompose(const LambdaParams& p, const State3& initial);

// Time grid plus complex amplitudes. gamma is empty for two-level
// trajectories.
struct Trajectory {
    std::vector<double> times;
    std::vector<complexd> alpha, beta, gamma;

    bool three_level() const { return !gamma.empty(); }
    double norm_sq(std::size_t i) const;
    double max_norm_deviation() const;
};

// Closed-form evaluation of the mode sum at each sample; exact at any t, no
// step-size logic.
Trajectory propagate_exact(const ModeDecomposition& d, std::span<const double> times);

}  // namespace lambda_elim
