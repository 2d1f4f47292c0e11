#pragma once

// Data-parallel inner loops shared by the Poisson and eigenvalue code paths.
//
// Every kernel has a scalar reference implementation and, on x86-64, an AVX2
// variant. The variant is picked once at runtime from CPUID; setting the
// environment variable MONGE_KERNELS=scalar forces the reference path.
//
// The stencil kernels (neg_laplacian, directional_extrema) perform the same
// floating point operations in the same order in both variants and agree
// bit-for-bit. The reductions (dot) reassociate and agree to rounding.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace monge::kernels {

enum class Backend { kScalar, kAvx2 };

std::string_view backend_name(Backend backend) noexcept;

struct KernelTable {
    Backend backend;

    /// y = -Laplacian(x) on an n x n block of interior unknowns with zero
    /// Dirichlet values outside the block, scaled by inv_h2.
    void (*neg_laplacian)(const double* x, double* y, std::size_t n, double inv_h2);

    double (*dot)(const double* a, const double* b, std::size_t len);

    /// y += alpha * x
    void (*axpy)(double alpha, const double* x, double* y, std::size_t len);

    /// y = x + beta * y
    void (*xpby)(const double* x, double beta, double* y, std::size_t len);

    double (*max_abs)(const double* x, std::size_t len);

    /// For k in [0, count): s = (c[k+offset] - 2 c[k] + c[k-offset]) / len2, then
    /// lmin/amin and lmax/amax are updated with strict comparisons so that ties
    /// keep the earlier direction.
    void (*directional_extrema)(const double* center, std::ptrdiff_t offset, double len2,
                                std::int32_t dir, std::size_t count, double* lmin,
                                std::int32_t* amin, double* lmax, std::int32_t* amax);
};

bool available(Backend backend) noexcept;

/// Throws std::invalid_argument when the backend is not available on this CPU.
const KernelTable& table(Backend backend);

/// Best available backend, honouring MONGE_KERNELS.
const KernelTable& active();

namespace detail {
extern const KernelTable kScalarTable;
#if defined(__x86_64__) || defined(_M_X64)
extern const KernelTable kAvx2Table;
#endif
} // namespace detail

} // namespace monge::kernels
