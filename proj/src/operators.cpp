#include "monge/operators.hpp"

#include <limits>
#include <string>

#include "monge/errors.hpp"
#include "monge/kernels.hpp"

namespace monge {
namespace {

void require_interior(const Grid2D& grid, Node node) {
    if (!grid.is_interior(node))
        throw NotApplicableError("node (" + std::to_string(node.i) + "," + std::to_string(node.j) +
                                 ") is not an interior node");
}

} // namespace

double second_difference(const GridFunction& u, Node node, const Direction& v) {
    const Grid2D& g = u.grid();
    if (!g.contains(node.i, node.j) || !is_admissible(g, node, v))
        throw OutOfGridError("direction (" + std::to_string(v.p) + "," + std::to_string(v.q) +
                             ") leaves the grid at node (" + std::to_string(node.i) + "," +
                             std::to_string(node.j) + ")");
    const double len2 = v.norm2() * (g.h() * g.h());
    return (u(node.i + v.p, node.j + v.q) - 2.0 * u(node.i, node.j) + u(node.i - v.p, node.j - v.q)) / len2;
}

EigenPairResult eigen_extrema(const GridFunction& u, Node node, const StencilDirections& stencil) {
    const Grid2D& g = u.grid();
    require_interior(g, node);
    EigenPairResult r;
    r.lambda_min = std::numeric_limits<double>::infinity();
    r.lambda_max = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < stencil.size(); ++k) {
        if (!is_admissible(g, node, stencil[k])) continue;
        const double s = second_difference(u, node, stencil[k]);
        if (s < r.lambda_min) {
            r.lambda_min = s;
            r.argmin_direction = k;
        }
        if (s > r.lambda_max) {
            r.lambda_max = s;
            r.argmax_direction = k;
        }
    }
    return r;
}

EigenPairResult lambda_min(const GridFunction& u, Node node, const StencilDirections& stencil) {
    return eigen_extrema(u, node, stencil);
}

EigenPairResult lambda_max(const GridFunction& u, Node node, const StencilDirections& stencil) {
    return eigen_extrema(u, node, stencil);
}

HessianCD central_hessian(const GridFunction& u, Node node) {
    const Grid2D& g = u.grid();
    require_interior(g, node);
    const int i = node.i;
    const int j = node.j;
    const double h2 = g.h() * g.h();
    HessianCD d;
    d.uxx = (u(i + 1, j) + u(i - 1, j) - 2.0 * u(i, j)) / h2;
    d.uyy = (u(i, j + 1) + u(i, j - 1) - 2.0 * u(i, j)) / h2;
    d.uxy = (u(i + 1, j + 1) + u(i - 1, j - 1) - u(i - 1, j + 1) - u(i + 1, j - 1)) / (4.0 * h2);
    return d;
}

double discrete_determinant(const GridFunction& u, Node node) {
    const HessianCD d = central_hessian(u, node);
    return d.uxx * d.uyy - d.uxy * d.uxy;
}

double laplacian5(const GridFunction& u, Node node) {
    const Grid2D& g = u.grid();
    require_interior(g, node);
    const int i = node.i;
    const int j = node.j;
    return (u(i + 1, j) + u(i - 1, j) + u(i, j + 1) + u(i, j - 1) - 4.0 * u(i, j)) / (g.h() * g.h());
}

EigenField eigen_field(const GridFunction& u, const StencilDirections& stencil) {
    const Grid2D& g = u.grid();
    const int n = g.n();
    const double h2 = g.h() * g.h();
    EigenField out;
    out.lmin.assign(g.node_count(), std::numeric_limits<double>::infinity());
    out.lmax.assign(g.node_count(), -std::numeric_limits<double>::infinity());
    out.amin.assign(g.node_count(), -1);
    out.amax.assign(g.node_count(), -1);

    const auto& k = kernels::active();
    for (std::size_t d = 0; d < stencil.size(); ++d) {
        const Direction& v = stencil[d];
        const int ap = std::abs(v.p);
        const int aq = std::abs(v.q);
        // Interior nodes whose two arms stay on the grid form a rectangle.
        const int i0 = std::max(1, ap);
        const int i1 = std::min(n - 2, n - 1 - ap);
        const int j0 = std::max(1, aq);
        const int j1 = std::min(n - 2, n - 1 - aq);
        if (i0 > i1 || j0 > j1) continue;
        const std::ptrdiff_t offset = static_cast<std::ptrdiff_t>(v.q) * n + v.p;
        const double len2 = v.norm2() * h2;
        const auto count = static_cast<std::size_t>(i1 - i0 + 1);
        for (int j = j0; j <= j1; ++j) {
            const std::size_t base = g.index(i0, j);
            k.directional_extrema(u.data() + base, offset, len2, static_cast<std::int32_t>(d), count,
                                  out.lmin.data() + base, out.amin.data() + base,
                                  out.lmax.data() + base, out.amax.data() + base);
        }
    }
    return out;
}

} // namespace monge
