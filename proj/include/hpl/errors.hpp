#pragma once

#include <stdexcept>
#include <string>

namespace hpl {

struct DimMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NonHermitianInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DomainViolation : std::domain_error {
    using std::domain_error::domain_error;
};

struct Defective2x2 : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnsupportedMatrixFunction : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ZeroDiagonal : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotDominating : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ConvergenceFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Randomized searches that exhaust their budget fail loudly.
struct IndependenceSearchFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct WitnessSearchFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegeneracyUnresolved : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace hpl
