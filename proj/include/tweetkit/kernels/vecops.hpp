// Copyright the tweetkit authors. Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.

#pragma once

#include <cstddef>
#include <span>

namespace tweetkit::kernels {

// Dense double-precision kernels used by the optimizer inner loops. Each entry
// point dispatches once, at first use, to the best backend the CPU supports
// (AVX2+FMA on x86-64, otherwise the scalar reference). Backends may differ in
// the last few ulps because of reassociation; everything downstream treats
// kernel output as approximate arithmetic, never as a hash input.

double dot(std::span<const double> x, std::span<const double> y);
void axpy(double a, std::span<const double> x, std::span<double> y); // y += a*x
void scale(double a, std::span<double> x);                           // x *= a
double inf_norm(std::span<const double> x);
double sum_squares(std::span<const double> x);

/// Name of the backend in use ("avx2" or "scalar").
const char* backend_name();

/// Force the scalar reference backend (used by tests and the TWEETKIT_SIMD=scalar env var).
void use_scalar_backend(bool on);

namespace ref {

// Scalar reference kernels. The dispatched functions above must agree with
// these within floating-point reassociation error; the equivalence suite in
// tests/ checks that on every build.

double dot(std::span<const double> x, std::span<const double> y);
void axpy(double a, std::span<const double> x, std::span<double> y);
void scale(double a, std::span<double> x);
double inf_norm(std::span<const double> x);
double sum_squares(std::span<const double> x);

} // namespace ref

#if defined(TWEETKIT_HAVE_AVX2)
namespace avx2 {

bool supported(); // runtime CPUID check

double dot(std::span<const double> x, std::span<const double> y);
void axpy(double a, std::span<const double> x, std::span<double> y);
void scale(double a, std::span<double> x);
double inf_norm(std::span<const double> x);
double sum_squares(std::span<const double> x);

} // namespace avx2
#endif

} // namespace tweetkit::kernels
