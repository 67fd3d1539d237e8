#pragma once

#include <complex>
#include <optional>

#include "lambda_elim/errors.hpp"

namespace lambda_elim {

using complexd = std::complex<double>;

// Rotating-frame parameters of the driven lambda system. hbar = 1 throughout;
// all frequencies are angular and carried in whatever units the caller picks,
// Delta*t being the natural dimensionless time.
struct LambdaParams {
    double delta = 0.0;      // two-photon detuning, delta_a - delta_b
    double big_delta = 0.0;  // common detuning Delta = (delta_a + delta_b)/2
    complexd omega_a{0.0, 0.0};
    complexd omega_b{0.0, 0.0};

    // Optional per-laser detunings; if given they must be consistent with
    // delta and big_delta above.
    std::optional<double> delta_a;
    std::optional<double> delta_b;
};

// Throws InvalidRegimeError when big_delta == 0, std::invalid_argument when
// the optional (delta_a, delta_b) bookkeeping disagrees with (delta, big_delta)
// beyond 1e-12 * |Delta|.
void validate(const LambdaParams& p);

// Dimensionless perturbation bookkeeping: epsilon is the common smallness
// parameter, (lambda, lambda_a, lambda_b) are the O(1) reduced detuning and
// couplings. Normalization fixed so that max(lambda, |lambda_a|, |lambda_b|)
// equals 1 and lambda >= 0; the sign of delta/(2 Delta) is kept separately
// for consistent root relabelling.
struct ReducedParams {
    double epsilon = 0.0;  // max(|delta|, |Omega_a|, |Omega_b|) / (2 |Delta|)
    double lambda = 0.0;   // |delta| / (2 |Delta| epsilon)
    complexd lambda_a{0.0, 0.0};  // Omega_a / (2 Delta epsilon)
    complexd lambda_b{0.0, 0.0};
    int delta_sign = 1;  // sign of delta/(2 Delta), +1 when delta == 0

    // The expansions assume |Delta| >> |delta|, |Omega_a|, |Omega_b|; callers
    // should treat epsilon > 0.2 as a warning, not an error.
    bool within_perturbative_regime() const { return epsilon <= 0.2; }
};

// Throws DegenerateInputError when delta = Omega_a = Omega_b = 0.
ReducedParams reduce(const LambdaParams& p);

// Inverse of reduce given the reference detuning; reproduces the original
// (delta, Omega_a, Omega_b) to relative 1e-14.
LambdaParams expand(const ReducedParams& r, double big_delta);

// Normalized three-level amplitude vector (alpha, beta, gamma) on
// span{|a>, |b>, |e>}. Normalization is enforced at construction.
struct State3 {
    complexd alpha, beta, gamma;

    State3(complexd a, complexd b, complexd c);
    double norm_sq() const;
};

// Two-level counterpart on span{|a>, |b>}.
struct State2 {
    complexd alpha, beta;

    State2(complexd a, complexd b);
    double norm_sq() const;
};

}  // namespace lambda_elim
