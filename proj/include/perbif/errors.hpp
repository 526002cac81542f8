#pragma once

#include <stdexcept>
#include <string>

namespace perbif {

/// Time integration failed (blow-up, step underflow, step budget, non-finite state).
struct IntegrationError : std::runtime_error {
    explicit IntegrationError(const std::string& what) : std::runtime_error(what) {}
};

/// Adaptive quadrature did not converge within the node cap.
struct QuadratureError : std::runtime_error {
    QuadratureError(const std::string& what, double last, double previous)
        : std::runtime_error(what), last_estimate(last), previous_estimate(previous) {}
    double last_estimate;
    double previous_estimate;
};

/// Newton/continuation failure, or a computed solution violated a hard invariant.
struct SolverError : std::runtime_error {
    explicit SolverError(const std::string& what) : std::runtime_error(what) {}
};

/// Requested branch does not exist because mu <= mu_k.
struct BelowInstantError : SolverError {
    BelowInstantError(const std::string& what, double eigenvalue)
        : SolverError(what), local_eigenvalue(eigenvalue) {}
    /// lambda_k(mu) at the requested parameter, for diagnosis.
    double local_eigenvalue;
};

/// Malformed or unsupported solution document.
struct DocumentError : std::runtime_error {
    explicit DocumentError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace perbif
