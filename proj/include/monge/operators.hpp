#pragma once

#include <cstdint>
#include <vector>

#include "monge/grid.hpp"

namespace monge {

/// Directional extrema of the discrete Hessian at one node. Direction indices
/// refer to positions in the full stencil.
struct EigenPairResult {
    double lambda_min = 0.0;
    double lambda_max = 0.0;
    std::size_t argmin_direction = 0;
    std::size_t argmax_direction = 0;
};

struct HessianCD {
    double uxx = 0.0;
    double uyy = 0.0;
    double uxy = 0.0;
};

/// (u(x+v) - 2u(x) + u(x-v)) / |v|^2 with |v| the physical offset length.
/// Throws OutOfGridError when x+v or x-v leaves the grid.
double second_difference(const GridFunction& u, Node node, const Direction& v);

/// Smallest/largest second difference over admissible directions. Ties go to
/// the first direction in angle order. Throws NotApplicableError off the interior.
EigenPairResult eigen_extrema(const GridFunction& u, Node node, const StencilDirections& stencil);
EigenPairResult lambda_min(const GridFunction& u, Node node, const StencilDirections& stencil);
EigenPairResult lambda_max(const GridFunction& u, Node node, const StencilDirections& stencil);

HessianCD central_hessian(const GridFunction& u, Node node);
double discrete_determinant(const GridFunction& u, Node node);
double laplacian5(const GridFunction& u, Node node);

/// lambda_min / lambda_max over every interior node at once, evaluated with
/// the active SIMD kernels. Entries at boundary nodes are left at +inf / -inf.
struct EigenField {
    std::vector<double> lmin;
    std::vector<double> lmax;
    std::vector<std::int32_t> amin;
    std::vector<std::int32_t> amax;
};

EigenField eigen_field(const GridFunction& u, const StencilDirections& stencil);

} // namespace monge
