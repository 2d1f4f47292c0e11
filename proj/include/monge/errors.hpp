#pragma once

#include <stdexcept>
#include <string>

namespace monge {

struct InvalidGridError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InvalidStencilError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Raised when an operation is asked about a node or problem it does not apply to
/// (boundary node for an interior-only query, error metric without exact solution).
struct NotApplicableError : std::logic_error {
    using std::logic_error::logic_error;
};

struct OutOfGridError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

struct InvalidDataError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DivergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class LinearSolverError : public std::runtime_error {
public:
    LinearSolverError(const std::string& what, double achieved_residual)
        : std::runtime_error(what), achieved_residual_(achieved_residual) {}

    double achieved_residual() const noexcept { return achieved_residual_; }

private:
    double achieved_residual_;
};

} // namespace monge
