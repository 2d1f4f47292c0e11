#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "monge/errors.hpp"
#include "monge/operators.hpp"

using namespace monge;

namespace {

// v^T M v / |v|^2 for the symmetric matrix [[a, b], [b, c]].
double rayleigh(double a, double b, double c, int p, int q) {
    return (a * p * p + 2 * b * p * q + c * q * q) / (p * p + q * q);
}

struct Sym {
    double a, b, c;
};

// R(theta) diag(l1, l2) R(theta)^T
Sym rotated(double l1, double l2, double theta) {
    const double cs = std::cos(theta);
    const double sn = std::sin(theta);
    return {l1 * cs * cs + l2 * sn * sn, (l1 - l2) * cs * sn, l1 * sn * sn + l2 * cs * cs};
}

GridFunction quadratic(const Grid2D& g, Sym m, double x0 = 0.5, double y0 = 0.5) {
    return GridFunction::sample(g, [=](double x, double y) {
        const double dx = x - x0;
        const double dy = y - y0;
        return 0.5 * (m.a * dx * dx + 2 * m.b * dx * dy + m.c * dy * dy);
    });
}

} // namespace

TEST_CASE("second_difference") {
    const Grid2D g = build_grid({0, 0, 1, 1}, 11);
    const auto s = build_stencil(2);
    const auto x2 = GridFunction::sample(g, [](double x, double) { return x * x; });
    for (int j = 1; j < 10; ++j)
        for (int i = 1; i < 10; ++i) CHECK(second_difference(x2, {i, j}, {1, 0, 0}) == doctest::Approx(2.0));

    const GridFunction c(g, 3.5);
    for (const auto& d : s.directions) CHECK(second_difference(c, {5, 5}, d) == 0.0);

    // Three-point formula for x^4 at x = 0.5 with h = 0.1:
    // (0.6^4 - 2 * 0.5^4 + 0.4^4) / 0.01 = 3.02
    const auto x4 = GridFunction::sample(g, [](double x, double) { return x * x * x * x; });
    CHECK(second_difference(x4, {5, 5}, {1, 0, 0}) == doctest::Approx(3.02).epsilon(1e-12));

    CHECK_THROWS_AS(second_difference(x2, {1, 1}, {2, 1, 0}), OutOfGridError);
}

TEST_CASE("lambda_min / lambda_max on quadratics") {
    const Grid2D g = build_grid({0, 0, 1, 1}, 31);
    const auto s = build_stencil(2);
    const Node centre{15, 15};

    const auto aniso = quadratic(g, {1, 0, 4});
    const auto mn = lambda_min(aniso, centre, s);
    CHECK(mn.lambda_min == doctest::Approx(1.0));
    CHECK(s[mn.argmin_direction].p == 1);
    CHECK(s[mn.argmin_direction].q == 0);
    const auto mx = lambda_max(aniso, centre, s);
    CHECK(mx.lambda_max == doctest::Approx(4.0));
    CHECK(s[mx.argmax_direction].p == 0);
    CHECK(s[mx.argmax_direction].q == 1);

    // Rotated by pi/8: the oracle evaluates v^T H v / |v|^2 over the 8 directions.
    const Sym rot = rotated(1.0, 4.0, std::numbers::pi / 8);
    double oracle_min = 1e9;
    for (const auto& d : s.directions) oracle_min = std::min(oracle_min, rayleigh(rot.a, rot.b, rot.c, d.p, d.q));
    const auto rmn = lambda_min(quadratic(g, rot), centre, s);
    CHECK(rmn.lambda_min == doctest::Approx(oracle_min).epsilon(1e-10));
    CHECK(rmn.lambda_min > 1.0);
    const double dtheta = directional_resolution(s);
    CHECK(rmn.lambda_min <= 1.0 + 3.0 * dtheta * dtheta * 1.01);

    const auto concave = quadratic(g, {-1, 0, -1});
    CHECK(lambda_min(concave, centre, s).lambda_min == doctest::Approx(-1.0));

    CHECK(lambda_max(quadratic(g, {1, 0, -1}), centre, s).lambda_max == doctest::Approx(1.0));

    const auto iso = quadratic(g, {1, 0, 1});
    const auto e = eigen_extrema(iso, centre, s);
    CHECK(e.lambda_min == doctest::Approx(1.0));
    CHECK(e.lambda_max == doctest::Approx(1.0));

    CHECK_THROWS_AS(lambda_min(iso, {0, 3}, s), NotApplicableError);
}

TEST_CASE("exactness on quadratics: second differences equal v^T M v / |v|^2") {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> coef(-3.0, 3.0);
    const Grid2D g = build_grid({0, 0, 1, 1}, 17);
    const auto s = build_stencil(3);
    for (int trial = 0; trial < 20; ++trial) {
        const Sym m{coef(rng), coef(rng), coef(rng)};
        const auto u = quadratic(g, m, 0.3, 0.6);
        for (const auto& d : s.directions) {
            const double expected = rayleigh(m.a, m.b, m.c, d.p, d.q);
            CHECK(second_difference(u, {8, 8}, d) == doctest::Approx(expected).epsilon(1e-9));
        }
        const auto e = eigen_extrema(u, {8, 8}, s);
        for (const auto& d : s.directions) {
            const double sd = second_difference(u, {8, 8}, d);
            CHECK(e.lambda_min <= sd);
            CHECK(sd <= e.lambda_max);
        }
    }
}

TEST_CASE("consistency: rotated quadratic error is independent of h and shrinks with width") {
    const Sym rot = rotated(1.0, 4.0, std::numbers::pi / 8);
    double err_w1 = -1.0;
    for (int n : {31, 63, 127}) {
        const Grid2D g = build_grid({0, 0, 1, 1}, n);
        const auto u = quadratic(g, rot);
        const Node c{n / 2, n / 2};
        const double e1 = std::abs(eigen_extrema(u, c, build_stencil(1)).lambda_min - 1.0);
        const double e2 = std::abs(eigen_extrema(u, c, build_stencil(2)).lambda_min - 1.0);
        if (err_w1 < 0) err_w1 = e1;
        CHECK(e1 == doctest::Approx(err_w1).epsilon(1e-8));
        CHECK(e1 >= 2.0 * e2);
    }
}

TEST_CASE("monotonicity: raising one neighbour never lowers lambda_min or lambda_max") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> val(-1.0, 1.0);
    std::uniform_real_distribution<double> bump(0.0, 0.5);
    const Grid2D g = build_grid({0, 0, 1, 1}, 9);
    const auto s = build_stencil(2);
    for (int trial = 0; trial < 200; ++trial) {
        GridFunction u(g);
        for (auto& v : u.values()) v = val(rng);
        const Node x{2 + static_cast<int>(rng() % 5), 2 + static_cast<int>(rng() % 5)};
        const auto before = eigen_extrema(u, x, s);
        const Direction& d = s[rng() % s.size()];
        const int sgn = (rng() % 2) ? 1 : -1;
        GridFunction w = u;
        w(x.i + sgn * d.p, x.j + sgn * d.q) += bump(rng);
        const auto after = eigen_extrema(w, x, s);
        CHECK(after.lambda_min >= before.lambda_min);
        CHECK(after.lambda_max >= before.lambda_max);
    }
}

TEST_CASE("central_hessian and discrete_determinant") {
    const Grid2D g = build_grid({0, 0, 1, 1}, 11);
    const auto xy = GridFunction::sample(g, [](double x, double y) { return x * y; });
    const auto hxy = central_hessian(xy, {4, 6});
    CHECK(hxy.uxy == doctest::Approx(1.0));
    CHECK(hxy.uxx == doctest::Approx(0.0));
    CHECK(hxy.uyy == doctest::Approx(0.0));
    CHECK(discrete_determinant(xy, {4, 6}) == doctest::Approx(-1.0));

    const auto r2 = GridFunction::sample(g, [](double x, double y) { return x * x + y * y; });
    const auto h = central_hessian(r2, {3, 3});
    CHECK(h.uxx == doctest::Approx(2.0));
    CHECK(h.uyy == doctest::Approx(2.0));
    CHECK(h.uxy == doctest::Approx(0.0).epsilon(1e-9));

    const auto half = GridFunction::sample(g, [](double x, double y) { return 0.5 * (x * x + y * y); });
    CHECK(discrete_determinant(half, {5, 5}) == doctest::Approx(1.0));

    const Grid2D g33 = build_grid({0, 0, 1, 1}, 33);  // h = 1/32
    const auto sines = GridFunction::sample(
        g33, [](double x, double y) { return std::sin(std::numbers::pi * x) * std::sin(std::numbers::pi * y); });
    const double pi2 = std::numbers::pi * std::numbers::pi;
    CHECK(std::abs(central_hessian(sines, {16, 16}).uxx + pi2) < 0.01 * pi2);

    const Grid2D g65 = build_grid({0, 0, 1, 1}, 65);  // h = 1/64, node 32 at 0.5
    const auto ex = GridFunction::sample(g65, [](double x, double y) { return std::exp(0.5 * (x * x + y * y)); });
    const double f_exact = 1.5 * std::exp(0.5);
    CHECK(std::abs(discrete_determinant(ex, {32, 32}) - f_exact) < 5.0 / (64.0 * 64.0));
}

TEST_CASE("laplacian5") {
    const Grid2D g = build_grid({0, 0, 1, 1}, 11);
    const auto r2 = GridFunction::sample(g, [](double x, double y) { return x * x + y * y; });
    CHECK(laplacian5(r2, {2, 7}) == doctest::Approx(4.0));
    const auto lin = GridFunction::sample(g, [](double x, double) { return x; });
    CHECK(laplacian5(lin, {5, 5}) == doctest::Approx(0.0).epsilon(1e-9));
    const auto cubic = GridFunction::sample(g, [](double x, double) { return x * x * x; });
    CHECK(laplacian5(cubic, {5, 5}) == doctest::Approx(3.0).epsilon(1e-10));
    CHECK_THROWS_AS(laplacian5(cubic, {0, 5}), NotApplicableError);
}
