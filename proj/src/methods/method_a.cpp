// Wide-stencil monotone scheme: lambda_min * lambda_max = f with the convex
// branch enforced by the eigenvalue clamp. Solved for u directly; g is recovered
// from the discrete eigenvalues afterwards.

#include <Eigen/SparseCore>
#include <Eigen/SparseLU>

#include <algorithm>
#include <cmath>
#include <vector>

#include "internal.hpp"
#include "monge/errors.hpp"

namespace monge {
namespace {

struct ResidualState {
    EigenField eig;
    GridFunction r;
    double norm = 0.0;
};

ResidualState evaluate(const GridFunction& u, const DiscreteProblem& p, const StencilDirections& stencil,
                       double delta) {
    const Grid2D& g = p.grid;
    ResidualState s{eigen_field(u, stencil), GridFunction(g), 0.0};
    for (int j = 1; j < g.n() - 1; ++j)
        for (int i = 1; i < g.n() - 1; ++i) {
            const std::size_t k = g.index(i, j);
            const double v = clamped_residual(s.eig.lmin[k], s.eig.lmax[k], p.f(i, j), delta);
            s.r(i, j) = v;
            if (std::isnan(v)) s.norm = v;
            else if (!std::isnan(s.norm)) s.norm = std::max(s.norm, std::abs(v));
        }
    return s;
}

double dt_from(const ResidualState& s, const Grid2D& g, const StencilDirections& stencil,
               const MethodConfig& cfg) {
    if (cfg.dt_policy == DtPolicy::kFixed) return cfg.fixed_dt;
    double lam = 0.0;
    for (int j = 1; j < g.n() - 1; ++j)
        for (int i = 1; i < g.n() - 1; ++i) {
            const std::size_t k = g.index(i, j);
            lam = std::max({lam, std::abs(s.eig.lmin[k]), std::abs(s.eig.lmax[k])});
        }
    return g.h() * g.h() / (2.0 * static_cast<double>(stencil.size()) * (1.0 + lam));
}

GridFunction initial_iterate(const DiscreteProblem& p, const MethodConfig& cfg) {
    if (cfg.initial_guess) {
        if (!(cfg.initial_guess->grid() == p.grid))
            throw std::invalid_argument("initial guess lives on a different grid");
        GridFunction u = *cfg.initial_guess;
        for (int j = 0; j < p.grid.n(); ++j)
            for (int i = 0; i < p.grid.n(); ++i)
                if (p.grid.is_boundary(i, j)) u(i, j) = p.phi(i, j);
        return u;
    }
    return detail::solve_with_g(p, GridFunction(p.grid), cfg.poisson, nullptr);
}

// u += dt * R on interior nodes; returns the max-norm increment.
double euler_update(GridFunction& u, const ResidualState& s, double dt) {
    const int n = u.grid().n();
    double inc = 0.0;
    for (int j = 1; j < n - 1; ++j)
        for (int i = 1; i < n - 1; ++i) {
            const double d = dt * s.r(i, j);
            u(i, j) += d;
            inc = std::max(inc, std::abs(d));
        }
    return inc;
}

void check_finite(const ResidualState& s) {
    if (!std::isfinite(s.norm)) throw DivergenceError("Method A iterate became non-finite");
}

void finish(SolveReport& rep, const DiscreteProblem& p, const StencilDirections& stencil,
            const detail::Stopwatch& clock) {
    rep.g = g_from_eigenvalues(rep.u, p.f, stencil);
    detail::fill_diagnostics(rep, stencil);
    rep.reported_iteration = rep.iterations;
    rep.seconds = clock.seconds();
}

using SparseMatrix = Eigen::SparseMatrix<double>;

// Jacobian of the clamped residual with the active directions frozen.
SparseMatrix jacobian(const ResidualState& s, const Grid2D& g, const StencilDirections& stencil,
                      double delta) {
    const int n = g.n();
    const int m = n - 2;
    auto unknown = [m](int i, int j) { return (j - 1) * m + (i - 1); };
    const double h2 = g.h() * g.h();

    std::vector<Eigen::Triplet<double>> trip;
    trip.reserve(static_cast<std::size_t>(m) * m * 6);
    auto add_direction = [&](int row, int i, int j, std::int32_t d, double coef) {
        if (coef == 0.0) return;
        const Direction& v = stencil[static_cast<std::size_t>(d)];
        const double w = coef / (v.norm2() * h2);
        trip.emplace_back(row, row, -2.0 * w);
        for (int sgn : {1, -1}) {
            const int a = i + sgn * v.p;
            const int b = j + sgn * v.q;
            if (!g.is_boundary(a, b)) trip.emplace_back(row, unknown(a, b), w);
        }
    };
    for (int j = 1; j < n - 1; ++j)
        for (int i = 1; i < n - 1; ++i) {
            const std::size_t k = g.index(i, j);
            const double l1 = s.eig.lmin[k];
            const double l2 = s.eig.lmax[k];
            const int row = unknown(i, j);
            if (l1 > delta) {
                add_direction(row, i, j, s.eig.amin[k], std::max(l2, delta));
                add_direction(row, i, j, s.eig.amax[k], std::max(l1, delta));
            } else {
                add_direction(row, i, j, s.eig.amin[k], 1.0);
                if (l2 > delta) add_direction(row, i, j, s.eig.amax[k], delta);
            }
        }
    SparseMatrix jac(m * m, m * m);
    jac.setFromTriplets(trip.begin(), trip.end());
    return jac;
}

bool solve_linear(const SparseMatrix& jac, const Eigen::VectorXd& rhs, Eigen::VectorXd& out) {
    Eigen::SparseLU<SparseMatrix, Eigen::COLAMDOrdering<int>> lu;
    lu.compute(jac);
    if (lu.info() != Eigen::Success) return false;
    out = lu.solve(rhs);
    return lu.info() == Eigen::Success && out.allFinite();
}

} // namespace

SolveReport method_a_euler(const Problem& problem, int n, const MethodConfig& cfg) {
    cfg.validate();
    const detail::Stopwatch clock;
    const DiscreteProblem p = discretize(problem, n);
    const StencilDirections stencil = build_stencil(cfg.stencil_width);
    const int cap = cfg.max_iterations > 0 ? cfg.max_iterations : 400 * n * n;

    SolveReport rep(p.grid);
    rep.u = initial_iterate(p, cfg);
    for (int it = 0; it < cap; ++it) {
        const ResidualState s = evaluate(rep.u, p, stencil, cfg.delta);
        check_finite(s);
        const double dt = dt_from(s, p.grid, stencil, cfg);
        const double inc = euler_update(rep.u, s, dt);
        rep.residual_history.push_back(s.norm);
        rep.increment_history.push_back(inc);
        rep.iterations = it + 1;
        if (inc <= cfg.tolerance * dt) {
            rep.converged = true;
            rep.stop_reason = StopReason::kConverged;
            break;
        }
    }
    finish(rep, p, stencil, clock);
    return rep;
}

SolveReport method_a_newton(const Problem& problem, int n, const MethodConfig& cfg) {
    cfg.validate();
    const detail::Stopwatch clock;
    const DiscreteProblem p = discretize(problem, n);
    const StencilDirections stencil = build_stencil(cfg.stencil_width);
    const int cap = cfg.max_iterations > 0 ? cfg.max_iterations : 50;
    const int m = n - 2;

    SolveReport rep(p.grid);
    rep.u = initial_iterate(p, cfg);
    ResidualState s = evaluate(rep.u, p, stencil, cfg.delta);
    check_finite(s);

    for (int it = 0; it < cap; ++it) {
        rep.residual_history.push_back(s.norm);
        rep.iterations = it + 1;

        Eigen::VectorXd rhs(m * m);
        for (int j = 1; j < n - 1; ++j)
            for (int i = 1; i < n - 1; ++i) rhs((j - 1) * m + (i - 1)) = -s.r(i, j);

        SparseMatrix jac = jacobian(s, p.grid, stencil, cfg.delta);
        Eigen::VectorXd du;
        bool ok = solve_linear(jac, rhs, du);
        if (!ok) {
            // Shift the (negative) diagonal away from zero and retry once.
            const double scale = std::max(1.0, jac.diagonal().cwiseAbs().maxCoeff());
            SparseMatrix shift(m * m, m * m);
            shift.setIdentity();
            jac -= 1e-10 * scale * shift;
            ok = solve_linear(jac, rhs, du);
        }

        double step = cfg.newton_initial_step;
        bool accepted = false;
        if (ok) {
            while (step >= cfg.newton_min_step) {
                GridFunction trial = rep.u;
                for (int j = 1; j < n - 1; ++j)
                    for (int i = 1; i < n - 1; ++i) trial(i, j) += step * du((j - 1) * m + (i - 1));
                ResidualState ts = evaluate(trial, p, stencil, cfg.delta);
                if (std::isfinite(ts.norm) && ts.norm < s.norm) {
                    rep.u = std::move(trial);
                    s = std::move(ts);
                    accepted = true;
                    break;
                }
                step *= cfg.newton_backtrack;
            }
        }

        if (accepted) {
            const double inc = step * du.cwiseAbs().maxCoeff();
            rep.increment_history.push_back(inc);
            if (inc <= cfg.tolerance && step == cfg.newton_initial_step) {
                rep.converged = true;
                rep.stop_reason = StopReason::kConverged;
                break;
            }
            continue;
        }

        // No usable Newton step: either the residual is already at rounding level
        // (zero increment) or we fall back to one explicit step.
        if (ok && du.cwiseAbs().maxCoeff() <= cfg.tolerance) {
            rep.increment_history.push_back(du.cwiseAbs().maxCoeff());
            rep.converged = true;
            rep.stop_reason = StopReason::kConverged;
            break;
        }
        const double dt = dt_from(s, p.grid, stencil, cfg);
        rep.increment_history.push_back(euler_update(rep.u, s, dt));
        s = evaluate(rep.u, p, stencil, cfg.delta);
        check_finite(s);
    }
    finish(rep, p, stencil, clock);
    return rep;
}

} // namespace monge
