#pragma once

#include <stdexcept>
#include <string>

namespace imcf {

// Field data fed to an operator is not finite or has the wrong length.
struct InvalidField : std::runtime_error {
    explicit InvalidField(const std::string& what) : std::runtime_error(what) {}
};

// A shape/grid specification violates a structural invariant.
struct InvalidSpec : std::runtime_error {
    explicit InvalidSpec(const std::string& what) : std::runtime_error(what) {}
};

// Mean curvature dropped below the positivity floor; 1/H is meaningless.
struct LostMeanConvexity : std::runtime_error {
    explicit LostMeanConvexity(const std::string& what) : std::runtime_error(what) {}
};

// The CFL step size underflowed; the explicit scheme cannot continue.
struct StiffnessFailure : std::runtime_error {
    explicit StiffnessFailure(const std::string& what) : std::runtime_error(what) {}
};

// A structurally impossible state was reached (indicates a bug).
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

// Bad command line / config file input.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace imcf
