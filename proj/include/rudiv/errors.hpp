// errors.hpp — error types for inconsistent numeric inputs

#pragma once

#include <stdexcept>

namespace rudiv {

// Eigenvalue input whose Hadamard transform has an imaginary residue above
// tolerance; signals a spectrum that cannot come from a Hermiticity-preserving map.
struct NonHermitianSpectrum : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// |lambda| fell below the singularity floor where a division by lambda is required.
struct SpectrumSingularity : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Recovered decoherence rates carry an imaginary residue above tolerance.
struct NonRealRates : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace rudiv
