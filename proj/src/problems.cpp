#include "monge/problems.hpp"

#include <algorithm>
#include <cmath>

#include "monge/errors.hpp"

namespace monge {

Problem example1() {
    auto u = [](double x, double y) { return std::exp(0.5 * (x * x + y * y)); };
    Problem p;
    p.name = "example1";
    p.domain = {0.0, 0.0, 1.0, 1.0};
    p.f = [](double x, double y) {
        const double r2 = x * x + y * y;
        return (r2 + 1.0) * std::exp(r2);
    };
    p.phi = u;
    p.exact = u;
    return p;
}

Problem example2() {
    auto u = [](double x, double y) {
        const double r = std::hypot(x - 0.5, y - 0.5);
        const double t = std::max(r - 0.2, 0.0);
        return 0.5 * t * t;
    };
    Problem p;
    p.name = "example2";
    p.domain = {0.0, 0.0, 1.0, 1.0};
    p.f = [](double x, double y) {
        const double r = std::hypot(x - 0.5, y - 0.5);
        if (r == 0.0) return 0.0;
        return std::max(1.0 - 0.2 / r, 0.0);
    };
    p.phi = u;
    p.exact = u;
    return p;
}

Problem example3() {
    auto u = [](double x, double y) { return -std::sqrt(std::max(2.0 - x * x - y * y, 0.0)); };
    Problem p;
    p.name = "example3";
    p.domain = {0.0, 0.0, 1.0, 1.0};
    p.f = [](double x, double y) {
        const double s = 2.0 - x * x - y * y;
        return 2.0 / (s * s);
    };
    p.phi = u;
    p.exact = u;
    return p;
}

Problem quadratic_problem() {
    auto u = [](double x, double y) { return 0.5 * (x * x + y * y); };
    Problem p;
    p.name = "quadratic";
    p.domain = {0.0, 0.0, 1.0, 1.0};
    p.f = [](double, double) { return 1.0; };
    p.phi = u;
    p.exact = u;
    return p;
}

GridFunction sample_rhs(const Problem& problem, const Grid2D& grid) {
    GridFunction f(grid);
    for (int j = 1; j < grid.n() - 1; ++j)
        for (int i = 1; i < grid.n() - 1; ++i) f(i, j) = problem.f(grid.x(i), grid.y(j));
    return f;
}

GridFunction sample_boundary(const Problem& problem, const Grid2D& grid) {
    GridFunction phi(grid);
    for (int j = 0; j < grid.n(); ++j)
        for (int i = 0; i < grid.n(); ++i)
            if (grid.is_boundary(i, j)) phi(i, j) = problem.phi(grid.x(i), grid.y(j));
    return phi;
}

GridFunction sample_exact(const Problem& problem, const Grid2D& grid) {
    if (!problem.exact) throw NotApplicableError("problem '" + problem.name + "' has no exact solution");
    return GridFunction::sample(grid, *problem.exact);
}

double linf_error(const GridFunction& u, const Problem& problem) {
    return max_abs_difference(u, sample_exact(problem, u.grid()));
}

} // namespace monge
