#include <algorithm>
#include <cmath>

#include "monge/kernels.hpp"

namespace monge::kernels {
namespace {

void neg_laplacian_scalar(const double* x, double* y, std::size_t n, double inv_h2) {
    for (std::size_t j = 0; j < n; ++j) {
        const double* row = x + j * n;
        const double* below = j > 0 ? row - n : nullptr;
        const double* above = j + 1 < n ? row + n : nullptr;
        double* out = y + j * n;
        for (std::size_t i = 0; i < n; ++i) {
            double s = 4.0 * row[i];
            s = s - (i > 0 ? row[i - 1] : 0.0);
            s = s - (i + 1 < n ? row[i + 1] : 0.0);
            s = s - (below ? below[i] : 0.0);
            s = s - (above ? above[i] : 0.0);
            out[i] = s * inv_h2;
        }
    }
}

double dot_scalar(const double* a, const double* b, std::size_t len) {
    double s = 0.0;
    for (std::size_t k = 0; k < len; ++k) s += a[k] * b[k];
    return s;
}

void axpy_scalar(double alpha, const double* x, double* y, std::size_t len) {
    for (std::size_t k = 0; k < len; ++k) y[k] += alpha * x[k];
}

void xpby_scalar(const double* x, double beta, double* y, std::size_t len) {
    for (std::size_t k = 0; k < len; ++k) y[k] = x[k] + beta * y[k];
}

double max_abs_scalar(const double* x, std::size_t len) {
    double m = 0.0;
    for (std::size_t k = 0; k < len; ++k) m = std::max(m, std::abs(x[k]));
    return m;
}

void directional_extrema_scalar(const double* c, std::ptrdiff_t offset, double len2,
                                std::int32_t dir, std::size_t count, double* lmin,
                                std::int32_t* amin, double* lmax, std::int32_t* amax) {
    for (std::size_t k = 0; k < count; ++k) {
        const double* x = c + k;
        const double s = (x[offset] - 2.0 * x[0] + x[-offset]) / len2;
        if (s < lmin[k]) {
            lmin[k] = s;
            amin[k] = dir;
        }
        if (s > lmax[k]) {
            lmax[k] = s;
            amax[k] = dir;
        }
    }
}

} // namespace

namespace detail {
const KernelTable kScalarTable{
    Backend::kScalar, neg_laplacian_scalar, dot_scalar, axpy_scalar, xpby_scalar,
    max_abs_scalar,   directional_extrema_scalar,
};
} // namespace detail

} // namespace monge::kernels
