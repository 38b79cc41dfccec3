#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>

namespace bads {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Index = Eigen::Index;

// Spec/validation failures surfaced to the caller.
struct BoundOrderError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InfeasibleStart : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NonFinitePlausibleBounds : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Objective returned a non-finite value (or kept doing so after a retry in
// stochastic mode). Carries the offending point in user coordinates.
struct ObjectiveError : std::runtime_error {
    Vector point;
    ObjectiveError(const std::string& what, Vector where)
        : std::runtime_error(what), point(std::move(where)) {}
};

// K + sigma^2 I could not be factorized even after jitter escalation.
struct FactorizationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace bads
