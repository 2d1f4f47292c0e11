#include "monge/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

#include "monge/errors.hpp"

namespace monge {

Grid2D::Grid2D(double xmin, double ymin, double side, int n)
    : xmin_(xmin), ymin_(ymin), side_(side), h_(side / (n - 1)), n_(n) {}

Grid2D build_grid(const Rect& domain, int n) {
    if (n < 3) throw InvalidGridError("grid needs at least 3 nodes per side, got " + std::to_string(n));
    const double lx = domain.xmax - domain.xmin;
    const double ly = domain.ymax - domain.ymin;
    if (!(lx > 0.0) || !(ly > 0.0)) throw InvalidGridError("domain side must be positive");
    if (std::abs(lx - ly) > 1e-12 * std::max(lx, ly))
        throw InvalidGridError("domain must be square");
    return Grid2D(domain.xmin, domain.ymin, lx, n);
}

StencilDirections build_stencil(int width) {
    if (width < 1) throw InvalidStencilError("stencil width must be >= 1, got " + std::to_string(width));
    StencilDirections out;
    out.width = width;
    // Half-plane representatives: p > 0, or p == 0 with q > 0.
    for (int p = 0; p <= width; ++p) {
        for (int q = -width; q <= width; ++q) {
            if (p == 0 && q <= 0) continue;
            if (std::gcd(p, std::abs(q)) != 1) continue;
            out.directions.push_back({p, q, std::atan2(static_cast<double>(q), static_cast<double>(p))});
        }
    }
    std::sort(out.directions.begin(), out.directions.end(),
              [](const Direction& a, const Direction& b) { return a.angle < b.angle; });
    return out;
}

double directional_resolution(const StencilDirections& stencil) {
    std::vector<double> angles;
    angles.reserve(2 * stencil.size());
    for (const auto& d : stencil.directions) {
        angles.push_back(d.angle);
        angles.push_back(d.angle > 0.0 ? d.angle - std::numbers::pi : d.angle + std::numbers::pi);
    }
    std::sort(angles.begin(), angles.end());
    double gap = angles.front() + 2.0 * std::numbers::pi - angles.back();
    for (std::size_t k = 1; k < angles.size(); ++k) gap = std::max(gap, angles[k] - angles[k - 1]);
    return 0.5 * gap;
}

bool is_admissible(const Grid2D& grid, Node node, const Direction& dir) noexcept {
    return grid.contains(node.i + dir.p, node.j + dir.q) && grid.contains(node.i - dir.p, node.j - dir.q);
}

StencilDirections admissible_directions(const Grid2D& grid, Node node,
                                        const StencilDirections& stencil) {
    if (!grid.is_interior(node))
        throw NotApplicableError("admissible directions are defined for interior nodes only");
    StencilDirections out;
    out.width = stencil.width;
    for (const auto& d : stencil.directions)
        if (is_admissible(grid, node, d)) out.directions.push_back(d);
    return out;
}

bool GridFunction::all_finite() const noexcept {
    return std::all_of(values_.begin(), values_.end(), [](double v) { return std::isfinite(v); });
}

double max_abs_difference(const GridFunction& a, const GridFunction& b) {
    if (!(a.grid() == b.grid())) throw std::invalid_argument("grid functions live on different grids");
    double m = 0.0;
    auto va = a.values();
    auto vb = b.values();
    for (std::size_t k = 0; k < va.size(); ++k) m = std::max(m, std::abs(va[k] - vb[k]));
    return m;
}

double interior_max_abs(const GridFunction& a) {
    const int n = a.grid().n();
    double m = 0.0;
    for (int j = 1; j < n - 1; ++j)
        for (int i = 1; i < n - 1; ++i) m = std::max(m, std::abs(a(i, j)));
    return m;
}

} // namespace monge
