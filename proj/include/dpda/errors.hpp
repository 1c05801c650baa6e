#pragma once

#include <stdexcept>

namespace dpda {

// Shared error taxonomy. Everything derives from std::runtime_error so
// callers can catch per category or broadly.

// Operand lengths/shapes do not agree.
struct DimensionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A gradient (or other vector) that must be nonzero has zero norm.
struct DegenerateGradientError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Sampled inputs were unusable (e.g. near-parallel direction draw); the
// caller should draw again.
struct ResampleRequiredError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A computation produced or received a non-finite value.
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid configuration detected before or during setup.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid runtime input (empty list, too-short signal, bad file, ...).
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace dpda
