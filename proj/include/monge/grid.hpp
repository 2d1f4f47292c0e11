#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace monge {

struct Rect {
    double xmin = 0.0;
    double ymin = 0.0;
    double xmax = 1.0;
    double ymax = 1.0;
};

struct Node {
    int i = 0;
    int j = 0;
    friend bool operator==(const Node&, const Node&) = default;
};

/// Uniform square grid with n x n nodes, boundary nodes included.
///
/// Node (i, j) sits at (xmin + i*h, ymin + j*h) with h = side / (n - 1), so the
/// perimeter nodes carry the Dirichlet data exactly. Storage order is x-fastest:
/// index(i, j) = j*n + i.
class Grid2D {
public:
    Grid2D(double xmin, double ymin, double side, int n);

    double xmin() const noexcept { return xmin_; }
    double ymin() const noexcept { return ymin_; }
    double xmax() const noexcept { return xmin_ + side_; }
    double ymax() const noexcept { return ymin_ + side_; }
    double side() const noexcept { return side_; }
    double h() const noexcept { return h_; }
    int n() const noexcept { return n_; }

    std::size_t node_count() const noexcept { return static_cast<std::size_t>(n_) * n_; }
    std::size_t interior_count() const noexcept {
        return static_cast<std::size_t>(n_ - 2) * (n_ - 2);
    }

    double x(int i) const noexcept { return xmin_ + i * h_; }
    double y(int j) const noexcept { return ymin_ + j * h_; }

    std::size_t index(int i, int j) const noexcept {
        return static_cast<std::size_t>(j) * n_ + i;
    }
    std::size_t index(Node node) const noexcept { return index(node.i, node.j); }

    bool contains(int i, int j) const noexcept { return i >= 0 && j >= 0 && i < n_ && j < n_; }
    bool is_boundary(int i, int j) const noexcept {
        return i == 0 || j == 0 || i == n_ - 1 || j == n_ - 1;
    }
    bool is_interior(Node node) const noexcept {
        return contains(node.i, node.j) && !is_boundary(node.i, node.j);
    }

    friend bool operator==(const Grid2D&, const Grid2D&) = default;

private:
    double xmin_;
    double ymin_;
    double side_;
    double h_;
    int n_;
};

/// Throws InvalidGridError for n < 3, a non-square domain or a non-positive side.
Grid2D build_grid(const Rect& domain, int n);

struct Direction {
    int p = 0;
    int q = 0;
    double angle = 0.0;  // in (-pi/2, pi/2]

    int norm2() const noexcept { return p * p + q * q; }
};

/// Coprime integer directions inside the width box, one per antipodal pair,
/// sorted by angle. The second difference along each uses both x+v and x-v.
struct StencilDirections {
    int width = 0;
    std::vector<Direction> directions;

    std::size_t size() const noexcept { return directions.size(); }
    const Direction& operator[](std::size_t k) const { return directions[k]; }
};

StencilDirections build_stencil(int width);

/// Half the largest angular gap between consecutive stencil directions,
/// antipodes included.
double directional_resolution(const StencilDirections& stencil);

bool is_admissible(const Grid2D& grid, Node node, const Direction& dir) noexcept;

/// Directions whose two arms node+v and node-v both stay on the grid.
/// Throws NotApplicableError for boundary nodes.
StencilDirections admissible_directions(const Grid2D& grid, Node node,
                                        const StencilDirections& stencil);

class GridFunction {
public:
    explicit GridFunction(const Grid2D& grid, double fill = 0.0)
        : grid_(grid), values_(grid.node_count(), fill) {}

    template <class Fn>
    static GridFunction sample(const Grid2D& grid, Fn&& fn) {
        GridFunction out(grid);
        for (int j = 0; j < grid.n(); ++j)
            for (int i = 0; i < grid.n(); ++i) out(i, j) = fn(grid.x(i), grid.y(j));
        return out;
    }

    const Grid2D& grid() const noexcept { return grid_; }

    double& operator()(int i, int j) { return values_[grid_.index(i, j)]; }
    double operator()(int i, int j) const { return values_[grid_.index(i, j)]; }
    double& operator[](Node node) { return values_[grid_.index(node)]; }
    double operator[](Node node) const { return values_[grid_.index(node)]; }

    std::span<double> values() noexcept { return values_; }
    std::span<const double> values() const noexcept { return values_; }
    double* data() noexcept { return values_.data(); }
    const double* data() const noexcept { return values_.data(); }

    bool all_finite() const noexcept;

private:
    Grid2D grid_;
    std::vector<double> values_;
};

/// max over all nodes of |a - b|; grids must match.
double max_abs_difference(const GridFunction& a, const GridFunction& b);
/// max over interior nodes of |a|.
double interior_max_abs(const GridFunction& a);

} // namespace monge
