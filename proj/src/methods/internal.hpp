#pragma once

#include <chrono>

#include "monge/methods.hpp"

namespace monge::detail {

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

/// Solves laplacian5(u) = 2 sqrt(f) + g with u = phi on the boundary.
GridFunction solve_with_g(const DiscreteProblem& problem, const GridFunction& g,
                          const PoissonSettings& settings, const GridFunction* warm_start);

/// Fills min_lambda1 (wide stencil) and min_gtilde (from report.g) over interior nodes.
void fill_diagnostics(SolveReport& report, const StencilDirections& stencil);

double interior_min(const GridFunction& a);
double interior_max_abs_diff(const GridFunction& a, const GridFunction& b);

} // namespace monge::detail
