#pragma once

namespace hpl {

// Numerical tolerances used throughout. The defaults target double precision
// and matrix dimensions up to a few dozen. All checks scale by
// max(1, ||A||_F) unless noted.
struct Tolerances {
    double sym = 1e-10;        // Hermitian symmetry check
    double eig = 1e-10;        // eigendecomposition residuals
    double psd = 1e-9;         // minimum-eigenvalue slack for PSD verdicts
    double defective = 1e-12;  // eigenvalue separation for 2x2 general solves
    double comm = 1e-10;       // commutator norm for commuting families
    double membership = 1e-12; // set-membership slack (integrality, monomial sets)
};

inline const Tolerances& default_tolerances() {
    static const Tolerances tol{};
    return tol;
}

} // namespace hpl
