#pragma once

#include <stdexcept>

namespace lambda_elim {

// All couplings vanish, so no smallness parameter can be defined.
struct DegenerateInputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The elimination regime requires a nonzero common detuning.
struct InvalidRegimeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Picture shift eta = -1 puts the laser frame on top of the excited level.
struct SingularPictureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The displacement operator R(z) has a pole at z = hbar*Delta.
struct PoleOfDisplacementError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two resolvent poles coincide to working precision.
struct DegeneratePoleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A driving denominator 2*omega +/- delta or 2*Delta +/- delta vanishes.
struct ResonanceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Scenario configuration is malformed or inconsistent.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Trajectories compared on different time grids.
struct GridMismatchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A scaling fit was requested on data with no signal (all errors zero).
struct DegenerateDataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace lambda_elim
