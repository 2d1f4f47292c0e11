#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <algorithm>
#include <cmath>

#include "monge/kernels.hpp"

#define MONGE_AVX2 __attribute__((target("avx2")))

namespace monge::kernels {
namespace {

MONGE_AVX2 void neg_laplacian_avx2(const double* x, double* y, std::size_t n, double inv_h2) {
    const __m256d four = _mm256_set1_pd(4.0);
    const __m256d scale = _mm256_set1_pd(inv_h2);
    const __m256d zero = _mm256_setzero_pd();
    for (std::size_t j = 0; j < n; ++j) {
        const double* row = x + j * n;
        const double* below = j > 0 ? row - n : nullptr;
        const double* above = j + 1 < n ? row + n : nullptr;
        double* out = y + j * n;
        auto edge = [&](std::size_t i) {
            double s = 4.0 * row[i];
            s = s - (i > 0 ? row[i - 1] : 0.0);
            s = s - (i + 1 < n ? row[i + 1] : 0.0);
            s = s - (below ? below[i] : 0.0);
            s = s - (above ? above[i] : 0.0);
            out[i] = s * inv_h2;
        };
        edge(0);
        if (n == 1) continue;
        std::size_t i = 1;
        for (; i + 4 <= n - 1; i += 4) {
            __m256d s = _mm256_mul_pd(four, _mm256_loadu_pd(row + i));
            s = _mm256_sub_pd(s, _mm256_loadu_pd(row + i - 1));
            s = _mm256_sub_pd(s, _mm256_loadu_pd(row + i + 1));
            s = _mm256_sub_pd(s, below ? _mm256_loadu_pd(below + i) : zero);
            s = _mm256_sub_pd(s, above ? _mm256_loadu_pd(above + i) : zero);
            _mm256_storeu_pd(out + i, _mm256_mul_pd(s, scale));
        }
        for (; i < n; ++i) edge(i);
    }
}

MONGE_AVX2 double dot_avx2(const double* a, const double* b, std::size_t len) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t k = 0;
    for (; k + 8 <= len; k += 8) {
        acc0 = _mm256_add_pd(acc0, _mm256_mul_pd(_mm256_loadu_pd(a + k), _mm256_loadu_pd(b + k)));
        acc1 = _mm256_add_pd(acc1, _mm256_mul_pd(_mm256_loadu_pd(a + k + 4), _mm256_loadu_pd(b + k + 4)));
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, _mm256_add_pd(acc0, acc1));
    double s = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
    for (; k < len; ++k) s += a[k] * b[k];
    return s;
}

MONGE_AVX2 void axpy_avx2(double alpha, const double* x, double* y, std::size_t len) {
    const __m256d a = _mm256_set1_pd(alpha);
    std::size_t k = 0;
    for (; k + 4 <= len; k += 4) {
        const __m256d v = _mm256_add_pd(_mm256_loadu_pd(y + k), _mm256_mul_pd(a, _mm256_loadu_pd(x + k)));
        _mm256_storeu_pd(y + k, v);
    }
    for (; k < len; ++k) y[k] += alpha * x[k];
}

MONGE_AVX2 void xpby_avx2(const double* x, double beta, double* y, std::size_t len) {
    const __m256d b = _mm256_set1_pd(beta);
    std::size_t k = 0;
    for (; k + 4 <= len; k += 4) {
        const __m256d v = _mm256_add_pd(_mm256_loadu_pd(x + k), _mm256_mul_pd(b, _mm256_loadu_pd(y + k)));
        _mm256_storeu_pd(y + k, v);
    }
    for (; k < len; ++k) y[k] = x[k] + beta * y[k];
}

MONGE_AVX2 double max_abs_avx2(const double* x, std::size_t len) {
    const __m256d sign = _mm256_set1_pd(-0.0);
    __m256d m = _mm256_setzero_pd();
    std::size_t k = 0;
    for (; k + 4 <= len; k += 4) m = _mm256_max_pd(m, _mm256_andnot_pd(sign, _mm256_loadu_pd(x + k)));
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, m);
    double r = std::max(std::max(lanes[0], lanes[1]), std::max(lanes[2], lanes[3]));
    for (; k < len; ++k) r = std::max(r, std::abs(x[k]));
    return r;
}

MONGE_AVX2 void directional_extrema_avx2(const double* c, std::ptrdiff_t offset, double len2,
                                         std::int32_t dir, std::size_t count, double* lmin,
                                         std::int32_t* amin, double* lmax, std::int32_t* amax) {
    const __m256d two = _mm256_set1_pd(2.0);
    const __m256d l2 = _mm256_set1_pd(len2);
    std::size_t k = 0;
    for (; k + 4 <= count; k += 4) {
        const double* x = c + k;
        __m256d s = _mm256_sub_pd(_mm256_loadu_pd(x + offset), _mm256_mul_pd(two, _mm256_loadu_pd(x)));
        s = _mm256_add_pd(s, _mm256_loadu_pd(x - offset));
        s = _mm256_div_pd(s, l2);

        const __m256d lo = _mm256_loadu_pd(lmin + k);
        const __m256d lt = _mm256_cmp_pd(s, lo, _CMP_LT_OQ);
        if (const int mask = _mm256_movemask_pd(lt)) {
            _mm256_storeu_pd(lmin + k, _mm256_blendv_pd(lo, s, lt));
            for (int lane = 0; lane < 4; ++lane)
                if (mask & (1 << lane)) amin[k + lane] = dir;
        }
        const __m256d hi = _mm256_loadu_pd(lmax + k);
        const __m256d gt = _mm256_cmp_pd(s, hi, _CMP_GT_OQ);
        if (const int mask = _mm256_movemask_pd(gt)) {
            _mm256_storeu_pd(lmax + k, _mm256_blendv_pd(hi, s, gt));
            for (int lane = 0; lane < 4; ++lane)
                if (mask & (1 << lane)) amax[k + lane] = dir;
        }
    }
    for (; k < count; ++k) {
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
const KernelTable kAvx2Table{
    Backend::kAvx2, neg_laplacian_avx2, dot_avx2, axpy_avx2, xpby_avx2,
    max_abs_avx2,   directional_extrema_avx2,
};
} // namespace detail

} // namespace monge::kernels

#endif
