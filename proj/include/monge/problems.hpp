#pragma once

#include <functional>
#include <optional>
#include <string>

#include "monge/grid.hpp"

namespace monge {

using ScalarField = std::function<double(double, double)>;

/// Dirichlet Monge-Ampere problem det(D^2 u) = f in the domain, u = phi on its
/// boundary, u convex.
struct Problem {
    std::string name;
    Rect domain;
    ScalarField f;
    ScalarField phi;
    std::optional<ScalarField> exact;
};

/// u = exp((x^2+y^2)/2) on [0,1]^2; smooth and strictly convex.
Problem example1();
/// u = ((r - 0.2)^+)^2 / 2 around (0.5, 0.5) on [0,1]^2; C^1 with f = 0 on the inner disc.
Problem example2();
/// u = -sqrt(2 - x^2 - y^2) on [0,1]^2; f blows up at the corner (1,1).
Problem example3();
/// u = (x^2+y^2)/2, f = 1 on [0,1]^2; every scheme here is exact on it.
Problem quadratic_problem();

/// f at interior nodes; boundary entries are 0 and never read by the solvers.
GridFunction sample_rhs(const Problem& problem, const Grid2D& grid);
/// phi at boundary nodes, 0 in the interior.
GridFunction sample_boundary(const Problem& problem, const Grid2D& grid);
/// Throws NotApplicableError when the problem has no exact solution.
GridFunction sample_exact(const Problem& problem, const Grid2D& grid);

/// max over all nodes of |u - exact|.
double linf_error(const GridFunction& u, const Problem& problem);

} // namespace monge
