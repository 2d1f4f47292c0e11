#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "internal.hpp"
#include "monge/errors.hpp"
#include "monge/operators.hpp"

namespace monge {

std::string_view stop_reason_name(StopReason reason) noexcept {
    switch (reason) {
        case StopReason::kConverged: return "converged";
        case StopReason::kIterationCap: return "iteration-cap";
        case StopReason::kStagnated: return "stagnated";
        case StopReason::kDiverged: return "diverged";
    }
    return "unknown";
}

void MethodConfig::validate() const {
    if (stencil_width < 1) throw InvalidStencilError("stencil width must be >= 1");
    if (!(tolerance > 0.0)) throw std::invalid_argument("tolerance must be positive");
    if (max_iterations < 0) throw std::invalid_argument("max_iterations must be >= 0");
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must lie in (0, 1)");
    if (!(delta >= 0.0)) throw std::invalid_argument("delta must be >= 0");
    if (!(g0 >= 0.0)) throw std::invalid_argument("g0 must be >= 0");
    if (dt_policy == DtPolicy::kFixed && !(fixed_dt > 0.0))
        throw std::invalid_argument("fixed dt policy needs a positive fixed_dt");
    if (!(newton_backtrack > 0.0 && newton_backtrack < 1.0))
        throw std::invalid_argument("Newton backtracking factor must lie in (0, 1)");
    if (!(newton_min_step > 0.0 && newton_min_step <= newton_initial_step))
        throw std::invalid_argument("Newton min step must lie in (0, initial step]");
    if (stagnation_patience < 1) throw std::invalid_argument("stagnation patience must be >= 1");
}

DiscreteProblem discretize(const Problem& problem, int n) {
    const Grid2D grid = build_grid(problem.domain, n);
    DiscreteProblem d{grid, sample_rhs(problem, grid), sample_boundary(problem, grid)};
    for (int j = 1; j < n - 1; ++j)
        for (int i = 1; i < n - 1; ++i)
            if (!(d.f(i, j) >= 0.0) || !std::isfinite(d.f(i, j)))
                throw InvalidDataError("f must be finite and non-negative at interior nodes");
    if (!d.phi.all_finite()) throw InvalidDataError("boundary data must be finite");
    return d;
}

double clamped_residual(double l1, double l2, double f, double delta) noexcept {
    return std::max(l1, delta) * std::max(l2, delta) + std::min(l1, delta) - delta - f;
}

GridFunction ma_residual(const GridFunction& u, const GridFunction& f, const StencilDirections& stencil,
                         double delta) {
    const Grid2D& g = u.grid();
    const int n = g.n();
    for (int j = 1; j < n - 1; ++j)
        for (int i = 1; i < n - 1; ++i)
            if (!(f(i, j) >= 0.0)) throw InvalidDataError("f must be non-negative");
    const EigenField e = eigen_field(u, stencil);
    GridFunction r(g);
    for (int j = 1; j < n - 1; ++j)
        for (int i = 1; i < n - 1; ++i) {
            const std::size_t k = g.index(i, j);
            r(i, j) = clamped_residual(e.lmin[k], e.lmax[k], f(i, j), delta);
        }
    return r;
}

GridFunction g_from_u(const GridFunction& u, const GridFunction& f) {
    const int n = u.grid().n();
    GridFunction out(u.grid());
    for (int j = 1; j < n - 1; ++j)
        for (int i = 1; i < n - 1; ++i) out(i, j) = laplacian5(u, {i, j}) - 2.0 * std::sqrt(f(i, j));
    return out;
}

GridFunction g_from_eigenvalues(const GridFunction& u, const GridFunction& f,
                                const StencilDirections& stencil) {
    const Grid2D& g = u.grid();
    const EigenField e = eigen_field(u, stencil);
    GridFunction out(g);
    for (int j = 1; j < g.n() - 1; ++j)
        for (int i = 1; i < g.n() - 1; ++i) {
            const std::size_t k = g.index(i, j);
            out(i, j) = e.lmin[k] + e.lmax[k] - 2.0 * std::sqrt(f(i, j));
        }
    return out;
}

double estimate_dt(const GridFunction& u, const GridFunction&, const StencilDirections& stencil) {
    const Grid2D& g = u.grid();
    const EigenField e = eigen_field(u, stencil);
    double lam = 0.0;
    for (int j = 1; j < g.n() - 1; ++j)
        for (int i = 1; i < g.n() - 1; ++i) {
            const std::size_t k = g.index(i, j);
            lam = std::max({lam, std::abs(e.lmin[k]), std::abs(e.lmax[k])});
        }
    return g.h() * g.h() / (2.0 * static_cast<double>(stencil.size()) * (1.0 + lam));
}

double central_ma_residual(const GridFunction& u, const GridFunction& f) {
    const int n = u.grid().n();
    double r = 0.0;
    for (int j = 1; j < n - 1; ++j)
        for (int i = 1; i < n - 1; ++i) r = std::max(r, std::abs(discrete_determinant(u, {i, j}) - f(i, j)));
    return r;
}

namespace detail {

GridFunction solve_with_g(const DiscreteProblem& problem, const GridFunction& g,
                          const PoissonSettings& settings, const GridFunction* warm_start) {
    const int n = problem.grid.n();
    PoissonSystem sys{GridFunction(problem.grid), problem.phi, settings};
    for (int j = 1; j < n - 1; ++j)
        for (int i = 1; i < n - 1; ++i) sys.rhs(i, j) = 2.0 * std::sqrt(problem.f(i, j)) + g(i, j);
    return solve_poisson(sys, warm_start);
}

double interior_min(const GridFunction& a) {
    const int n = a.grid().n();
    double m = std::numeric_limits<double>::infinity();
    for (int j = 1; j < n - 1; ++j)
        for (int i = 1; i < n - 1; ++i) m = std::min(m, a(i, j));
    return m;
}

double interior_max_abs_diff(const GridFunction& a, const GridFunction& b) {
    const int n = a.grid().n();
    double m = 0.0;
    for (int j = 1; j < n - 1; ++j)
        for (int i = 1; i < n - 1; ++i) {
            const double d = std::abs(a(i, j) - b(i, j));
            if (std::isnan(d)) return d;
            m = std::max(m, d);
        }
    return m;
}

void fill_diagnostics(SolveReport& report, const StencilDirections& stencil) {
    const Grid2D& g = report.u.grid();
    const EigenField e = eigen_field(report.u, stencil);
    double lmin = std::numeric_limits<double>::infinity();
    for (int j = 1; j < g.n() - 1; ++j)
        for (int i = 1; i < g.n() - 1; ++i) lmin = std::min(lmin, e.lmin[g.index(i, j)]);
    report.min_lambda1 = lmin;
    report.min_gtilde = interior_min(report.g);
}

} // namespace detail
} // namespace monge
