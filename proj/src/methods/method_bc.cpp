// Poisson-based fixed point iterations on g, with u^g the solution of
// laplacian(u) = 2 sqrt(f) + g. Second derivatives use central differences;
// nodes next to the boundary read the Dirichlet values directly.

#include <algorithm>
#include <cmath>
#include <limits>

#include "internal.hpp"
#include "monge/errors.hpp"

namespace monge {

FixedPointStep method_b_step(const GridFunction& g, const DiscreteProblem& p, const PoissonSettings& poisson,
                             const GridFunction* warm_start) {
    const int n = p.grid.n();
    GridFunction g_in(p.grid);
    for (int j = 1; j < n - 1; ++j)
        for (int i = 1; i < n - 1; ++i) g_in(i, j) = std::max(g(i, j), 0.0);

    FixedPointStep out{GridFunction(p.grid), detail::solve_with_g(p, g_in, poisson, warm_start)};
    for (int j = 1; j < n - 1; ++j)
        for (int i = 1; i < n - 1; ++i) {
            const HessianCD d = central_hessian(out.u, {i, j});
            const double f = p.f(i, j);
            const double q = std::sqrt(d.uxx * d.uxx + d.uyy * d.uyy + 2.0 * d.uxy * d.uxy + 2.0 * f) -
                             2.0 * std::sqrt(f);
            out.g_next(i, j) = std::max(q, 0.0);
        }
    return out;
}

FixedPointStep method_c_step(const GridFunction& g, const DiscreteProblem& p, double alpha,
                             const PoissonSettings& poisson, const GridFunction* warm_start) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must lie in (0, 1)");
    const int n = p.grid.n();
    FixedPointStep out{GridFunction(p.grid), detail::solve_with_g(p, g, poisson, warm_start)};
    for (int j = 1; j < n - 1; ++j)
        for (int i = 1; i < n - 1; ++i)
            out.g_next(i, j) = alpha * std::sqrt(std::abs(discrete_determinant(out.u, {i, j}) - p.f(i, j))) + g(i, j);
    return out;
}

namespace {

GridFunction constant_interior(const Grid2D& grid, double value) {
    GridFunction g(grid);
    for (int j = 1; j < grid.n() - 1; ++j)
        for (int i = 1; i < grid.n() - 1; ++i) g(i, j) = value;
    return g;
}

} // namespace

SolveReport method_b_solve(const Problem& problem, int n, const MethodConfig& cfg) {
    cfg.validate();
    const detail::Stopwatch clock;
    const DiscreteProblem p = discretize(problem, n);
    const StencilDirections stencil = build_stencil(cfg.stencil_width);
    const int cap = cfg.max_iterations > 0 ? cfg.max_iterations : 5000;
    const double blowup = 1e6 * (1.0 + cfg.g0);

    SolveReport rep(p.grid);
    GridFunction g = constant_interior(p.grid, cfg.g0);
    std::optional<GridFunction> warm;
    for (int it = 0; it < cap; ++it) {
        FixedPointStep step = method_b_step(g, p, cfg.poisson, warm ? &*warm : nullptr);
        const double inc = detail::interior_max_abs_diff(step.g_next, g);
        rep.residual_history.push_back(central_ma_residual(step.u, p.f));
        rep.increment_history.push_back(inc);
        rep.iterations = it + 1;
        g = std::move(step.g_next);
        warm = std::move(step.u);
        if (inc <= cfg.tolerance) {
            rep.converged = true;
            rep.stop_reason = StopReason::kConverged;
            break;
        }
        if (!std::isfinite(inc) || interior_max_abs(g) > blowup) {
            rep.stop_reason = StopReason::kDiverged;
            break;
        }
    }
    if (rep.stop_reason == StopReason::kDiverged) {
        // Report the last finite Poisson iterate rather than solving with a blown-up g.
        rep.u = std::move(*warm);
        rep.g = g;
    } else {
        rep.g = g;
        rep.u = detail::solve_with_g(p, g, cfg.poisson, warm ? &*warm : nullptr);
    }
    rep.reported_iteration = rep.iterations;
    detail::fill_diagnostics(rep, stencil);
    rep.min_gtilde = detail::interior_min(g_from_u(rep.u, p.f));
    rep.seconds = clock.seconds();
    return rep;
}

SolveReport method_c_solve(const Problem& problem, int n, const MethodConfig& cfg) {
    cfg.validate();
    const detail::Stopwatch clock;
    const DiscreteProblem p = discretize(problem, n);
    const StencilDirections stencil = build_stencil(cfg.stencil_width);
    const int cap = cfg.max_iterations > 0 ? cfg.max_iterations : 5000;

    SolveReport rep(p.grid);
    GridFunction g = constant_interior(p.grid, cfg.g0);
    std::optional<GridFunction> warm;

    double best_res = std::numeric_limits<double>::infinity();
    int best_it = -1;
    std::optional<GridFunction> best_u, best_g;

    for (int it = 0; it < cap; ++it) {
        FixedPointStep step = method_c_step(g, p, cfg.alpha, cfg.poisson, warm ? &*warm : nullptr);
        const double res = central_ma_residual(step.u, p.f);
        const double inc = detail::interior_max_abs_diff(step.g_next, g);
        rep.residual_history.push_back(res);
        rep.increment_history.push_back(inc);
        rep.iterations = it + 1;
        if (!std::isfinite(res) || !std::isfinite(inc)) {
            rep.stop_reason = StopReason::kDiverged;
            break;
        }
        if (res < best_res) {
            best_res = res;
            best_it = it;
            best_u = step.u;
            best_g = g;
        }
        if (res <= cfg.tolerance || inc <= cfg.tolerance) {
            // u^g already satisfies the equation, or g no longer moves.
            rep.converged = true;
            rep.stop_reason = StopReason::kConverged;
            best_it = it;
            best_u = std::move(step.u);
            best_g = std::move(g);
            break;
        }
        if (it - best_it >= cfg.stagnation_patience) {
            rep.stop_reason = StopReason::kStagnated;
            break;
        }
        g = std::move(step.g_next);
        warm = std::move(step.u);
    }
    if (!best_u) throw DivergenceError("Method C produced no finite iterate");
    rep.u = std::move(*best_u);
    rep.g = std::move(*best_g);
    rep.reported_iteration = best_it;
    detail::fill_diagnostics(rep, stencil);
    rep.min_gtilde = detail::interior_min(g_from_u(rep.u, p.f));
    rep.seconds = clock.seconds();
    return rep;
}

} // namespace monge
