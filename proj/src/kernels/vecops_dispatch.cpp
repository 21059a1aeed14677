// Copyright the tweetkit authors. Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.

#include "tweetkit/kernels/vecops.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

namespace tweetkit::kernels {

namespace {

struct Backend {
    const char* name;
    double (*dot)(std::span<const double>, std::span<const double>);
    void (*axpy)(double, std::span<const double>, std::span<double>);
    void (*scale)(double, std::span<double>);
    double (*inf_norm)(std::span<const double>);
    double (*sum_squares)(std::span<const double>);
};

constexpr Backend kScalar{"scalar", &ref::dot, &ref::axpy, &ref::scale,
                          &ref::inf_norm, &ref::sum_squares};

#if defined(TWEETKIT_HAVE_AVX2)
constexpr Backend kAvx2{"avx2", &avx2::dot, &avx2::axpy, &avx2::scale,
                        &avx2::inf_norm, &avx2::sum_squares};
#endif

std::atomic<const Backend*> g_backend{nullptr};

const Backend* pick_backend() {
    const char* env = std::getenv("TWEETKIT_SIMD");
    if (env != nullptr && std::strcmp(env, "scalar") == 0) return &kScalar;
#if defined(TWEETKIT_HAVE_AVX2)
    if (avx2::supported()) return &kAvx2;
#endif
    return &kScalar;
}

const Backend& backend() {
    const Backend* b = g_backend.load(std::memory_order_acquire);
    if (b == nullptr) {
        b = pick_backend();
        g_backend.store(b, std::memory_order_release);
    }
    return *b;
}

} // namespace

double dot(std::span<const double> x, std::span<const double> y) { return backend().dot(x, y); }
void axpy(double a, std::span<const double> x, std::span<double> y) { backend().axpy(a, x, y); }
void scale(double a, std::span<double> x) { backend().scale(a, x); }
double inf_norm(std::span<const double> x) { return backend().inf_norm(x); }
double sum_squares(std::span<const double> x) { return backend().sum_squares(x); }

const char* backend_name() { return backend().name; }

void use_scalar_backend(bool on) {
    g_backend.store(on ? &kScalar : pick_backend(), std::memory_order_release);
}

} // namespace tweetkit::kernels
