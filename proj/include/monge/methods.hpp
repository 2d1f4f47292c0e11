#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "monge/grid.hpp"
#include "monge/operators.hpp"
#include "monge/poisson.hpp"
#include "monge/problems.hpp"

namespace monge {

enum class DtPolicy { kAdaptive, kFixed };

enum class StopReason {
    kConverged,
    kIterationCap,
    kStagnated,  // Method C: MA residual stopped improving over the patience window
    kDiverged,   // Method B: |g| blew past the divergence threshold
};

std::string_view stop_reason_name(StopReason reason) noexcept;

struct MethodConfig {
    int stencil_width = 2;
    /// Outer tolerance on the L-infinity increment (u for Method A, g for B and C).
    double tolerance = 1e-8;
    /// 0 picks the per-method default: 400*N^2 (Euler), 50 (Newton), 5000 (B, C).
    int max_iterations = 0;

    DtPolicy dt_policy = DtPolicy::kAdaptive;
    double fixed_dt = 0.0;

    double newton_initial_step = 1.0;
    double newton_backtrack = 0.5;
    double newton_min_step = 1.0 / 1024.0;

    /// Method C relaxation, 0 < alpha < 1.
    double alpha = 0.1;
    /// Constant initial value for g (Methods B and C).
    double g0 = 0.0;
    /// Eigenvalue clamp for the Method A residual, >= 0.
    double delta = 0.0;
    /// Method C stops once the MA residual has not improved for this many iterations.
    int stagnation_patience = 20;

    /// Method A starting iterate; defaults to the Poisson solution of laplacian(u) = 2 sqrt(f).
    std::optional<GridFunction> initial_guess;

    PoissonSettings poisson{};

    /// Throws std::invalid_argument on out-of-range parameters.
    void validate() const;
};

struct SolveReport {
    explicit SolveReport(const Grid2D& grid) : u(grid), g(grid) {}

    GridFunction u;
    /// The auxiliary field linking u to a Poisson problem: laplacian(u) = 2 sqrt(f) + g.
    GridFunction g;
    int iterations = 0;
    /// residual_history[m]: max-norm MA residual of the iterate entering iteration m.
    std::vector<double> residual_history;
    std::vector<double> increment_history;
    double seconds = 0.0;
    bool converged = false;
    StopReason stop_reason = StopReason::kIterationCap;
    /// Iteration whose iterate is reported (differs from the last one for Method C).
    int reported_iteration = 0;
    double min_lambda1 = 0.0;
    double min_gtilde = 0.0;
};

/// Problem data sampled on a grid; f is checked to be finite and non-negative
/// at interior nodes.
struct DiscreteProblem {
    Grid2D grid;
    GridFunction f;
    GridFunction phi;
};

DiscreteProblem discretize(const Problem& problem, int n);

/// max(l1, d) * max(l2, d) + min(l1, d) - d - f at one node.
double clamped_residual(double lambda1, double lambda2, double f, double delta) noexcept;

/// Method A residual at every interior node (boundary entries 0). Throws
/// InvalidDataError if f is negative anywhere.
GridFunction ma_residual(const GridFunction& u, const GridFunction& f, const StencilDirections& stencil,
                         double delta);

/// laplacian5(u) - 2 sqrt(f) at interior nodes.
GridFunction g_from_u(const GridFunction& u, const GridFunction& f);

/// lambda_min + lambda_max - 2 sqrt(f) at interior nodes: the g of the wide
/// stencil scheme, whose trace is the sum of the two discrete eigenvalues.
GridFunction g_from_eigenvalues(const GridFunction& u, const GridFunction& f,
                                const StencilDirections& stencil);

/// h^2 / (2 S (1 + max |lambda|)) with S the number of direction pairs.
double estimate_dt(const GridFunction& u, const GridFunction& f, const StencilDirections& stencil);

/// max over interior nodes of |uxx*uyy - uxy^2 - f| with central differences.
double central_ma_residual(const GridFunction& u, const GridFunction& f);

SolveReport method_a_euler(const Problem& problem, int n, const MethodConfig& config);
SolveReport method_a_newton(const Problem& problem, int n, const MethodConfig& config);

struct FixedPointStep {
    GridFunction g_next;
    GridFunction u;  // the Poisson solution for the input g
};

/// u = Poisson(2 sqrt(f) + max(g, 0)); g_next = sqrt(uxx^2 + uyy^2 + 2 uxy^2 + 2f) - 2 sqrt(f),
/// clamped at 0.
FixedPointStep method_b_step(const GridFunction& g, const DiscreteProblem& problem,
                             const PoissonSettings& poisson = {}, const GridFunction* warm_start = nullptr);
SolveReport method_b_solve(const Problem& problem, int n, const MethodConfig& config);

/// u = Poisson(2 sqrt(f) + g); g_next = alpha sqrt(|det(D^2 u) - f|) + g.
FixedPointStep method_c_step(const GridFunction& g, const DiscreteProblem& problem, double alpha,
                             const PoissonSettings& poisson = {}, const GridFunction* warm_start = nullptr);
SolveReport method_c_solve(const Problem& problem, int n, const MethodConfig& config);

} // namespace monge
