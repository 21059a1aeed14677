// Copyright the tweetkit authors. Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.

// AVX2+FMA variants of the vector kernels. This translation unit is compiled
// with -mavx2 -mfma; nothing here may run before avx2::supported() says yes.

#include "tweetkit/kernels/vecops.hpp"

#if defined(TWEETKIT_HAVE_AVX2)

#include <cmath>
#include <immintrin.h>

namespace tweetkit::kernels::avx2 {

bool supported() {
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}

double dot(std::span<const double> x, std::span<const double> y) {
    const std::size_t n = x.size();
    const double* px = x.data();
    const double* py = y.data();

    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(px + i), _mm256_loadu_pd(py + i), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(px + i + 4), _mm256_loadu_pd(py + i + 4), acc1);
    }
    for (; i + 4 <= n; i += 4) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(px + i), _mm256_loadu_pd(py + i), acc0);
    }
    acc0 = _mm256_add_pd(acc0, acc1);
    __m128d lo = _mm256_castpd256_pd128(acc0);
    __m128d hi = _mm256_extractf128_pd(acc0, 1);
    lo = _mm_add_pd(lo, hi);
    double acc = _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
    for (; i < n; ++i) acc += px[i] * py[i];
    return acc;
}

void axpy(double a, std::span<const double> x, std::span<double> y) {
    const std::size_t n = x.size();
    const double* px = x.data();
    double* py = y.data();
    const __m256d va = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d vy = _mm256_loadu_pd(py + i);
        vy = _mm256_fmadd_pd(va, _mm256_loadu_pd(px + i), vy);
        _mm256_storeu_pd(py + i, vy);
    }
    for (; i < n; ++i) py[i] += a * px[i];
}

void scale(double a, std::span<double> x) {
    const std::size_t n = x.size();
    double* px = x.data();
    const __m256d va = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        _mm256_storeu_pd(px + i, _mm256_mul_pd(va, _mm256_loadu_pd(px + i)));
    }
    for (; i < n; ++i) px[i] *= a;
}

double inf_norm(std::span<const double> x) {
    const std::size_t n = x.size();
    const double* px = x.data();
    const __m256d sign_mask = _mm256_set1_pd(-0.0);
    __m256d vmax = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d v = _mm256_andnot_pd(sign_mask, _mm256_loadu_pd(px + i));
        vmax = _mm256_max_pd(vmax, v);
    }
    __m128d lo = _mm256_castpd256_pd128(vmax);
    __m128d hi = _mm256_extractf128_pd(vmax, 1);
    lo = _mm_max_pd(lo, hi);
    double m = _mm_cvtsd_f64(_mm_max_sd(lo, _mm_unpackhi_pd(lo, lo)));
    for (; i < n; ++i) m = std::max(m, std::fabs(px[i]));
    return m;
}

double sum_squares(std::span<const double> x) {
    const std::size_t n = x.size();
    const double* px = x.data();
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        const __m256d v0 = _mm256_loadu_pd(px + i);
        const __m256d v1 = _mm256_loadu_pd(px + i + 4);
        acc0 = _mm256_fmadd_pd(v0, v0, acc0);
        acc1 = _mm256_fmadd_pd(v1, v1, acc1);
    }
    for (; i + 4 <= n; i += 4) {
        const __m256d v = _mm256_loadu_pd(px + i);
        acc0 = _mm256_fmadd_pd(v, v, acc0);
    }
    acc0 = _mm256_add_pd(acc0, acc1);
    __m128d lo = _mm256_castpd256_pd128(acc0);
    __m128d hi = _mm256_extractf128_pd(acc0, 1);
    lo = _mm_add_pd(lo, hi);
    double acc = _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
    for (; i < n; ++i) acc += px[i] * px[i];
    return acc;
}

} // namespace tweetkit::kernels::avx2

#endif // TWEETKIT_HAVE_AVX2
