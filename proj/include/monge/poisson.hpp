#pragma once

#include <optional>

#include "monge/grid.hpp"

namespace monge {

struct PoissonSettings {
    /// Converged when max_interior |laplacian5(u) - rhs| <= tolerance * (1 + max|rhs|).
    double tolerance = 1e-10;
    /// 0 selects a cap proportional to the number of unknowns.
    int max_iterations = 0;
};

/// Discrete Dirichlet problem laplacian5(u) = rhs on interior nodes, u = boundary
/// on perimeter nodes. Only the interior entries of rhs and the perimeter entries
/// of boundary are read.
struct PoissonSystem {
    GridFunction rhs;
    GridFunction boundary;
    PoissonSettings settings{};
};

struct PoissonStats {
    int iterations = 0;
    double residual = 0.0;
};

/// Conjugate gradients on the negated 5-point operator with boundary values
/// eliminated into the right-hand side. An optional warm start supplies the
/// initial interior values. Throws LinearSolverError when the iteration cap is
/// hit before the tolerance is met.
GridFunction solve_poisson(const PoissonSystem& system,
                           const GridFunction* warm_start = nullptr,
                           PoissonStats* stats = nullptr);

double poisson_residual(const GridFunction& u, const PoissonSystem& system);

} // namespace monge
