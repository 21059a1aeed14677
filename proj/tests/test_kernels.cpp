// Copyright the tweetkit authors. Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.

#include "tweetkit/kernels/vecops.hpp"

#include "doctest.h"

#include <random>
#include <vector>

namespace k = tweetkit::kernels;

TEST_CASE("scalar reference kernels on hand values") {
    std::vector<double> x{1.0, 2.0, 3.0};
    std::vector<double> y{4.0, 5.0, 6.0};
    CHECK(k::ref::dot(x, y) == doctest::Approx(32.0));
    CHECK(k::ref::sum_squares(x) == doctest::Approx(14.0));
    CHECK(k::ref::inf_norm(std::vector<double>{-5.0, 3.0, 4.5}) == doctest::Approx(5.0));

    k::ref::axpy(2.0, x, y);
    CHECK(y[0] == doctest::Approx(6.0));
    CHECK(y[2] == doctest::Approx(12.0));

    k::ref::scale(0.5, y);
    CHECK(y[0] == doctest::Approx(3.0));

    CHECK(k::ref::dot(std::vector<double>{}, std::vector<double>{}) == 0.0);
    CHECK(k::ref::inf_norm(std::vector<double>{}) == 0.0);
}

TEST_CASE("dispatched kernels match the scalar reference on every length") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> dist(-10.0, 10.0);

    INFO("active backend: ", k::backend_name());
    for (std::size_t n : {std::size_t{0}, std::size_t{1}, std::size_t{2}, std::size_t{3},
                          std::size_t{4}, std::size_t{5}, std::size_t{7}, std::size_t{8},
                          std::size_t{9}, std::size_t{15}, std::size_t{16}, std::size_t{17},
                          std::size_t{31}, std::size_t{63}, std::size_t{64}, std::size_t{65},
                          std::size_t{1000}, std::size_t{1021}}) {
        std::vector<double> x(n), y(n);
        for (std::size_t i = 0; i < n; ++i) {
            x[i] = dist(rng);
            y[i] = dist(rng);
        }
        const double tol = 1e-12 * (1.0 + static_cast<double>(n));

        CHECK(k::dot(x, y) == doctest::Approx(k::ref::dot(x, y)).epsilon(tol));
        CHECK(k::sum_squares(x) == doctest::Approx(k::ref::sum_squares(x)).epsilon(tol));
        CHECK(k::inf_norm(x) == k::ref::inf_norm(x)); // max of abs is exact

        std::vector<double> y1 = y, y2 = y;
        k::axpy(1.5, x, y1);
        k::ref::axpy(1.5, x, y2);
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(y1[i] == doctest::Approx(y2[i]).epsilon(1e-14));
        }

        std::vector<double> s1 = x, s2 = x;
        k::scale(-0.25, s1);
        k::ref::scale(-0.25, s2);
        for (std::size_t i = 0; i < n; ++i) CHECK(s1[i] == s2[i]); // single multiply is exact
    }
}

#if defined(TWEETKIT_HAVE_AVX2)
TEST_CASE("avx2 kernels agree with scalar when the cpu has them") {
    if (!k::avx2::supported()) return;

    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> dist(-100.0, 100.0);
    for (std::size_t n = 0; n <= 70; ++n) {
        std::vector<double> x(n), y(n);
        for (std::size_t i = 0; i < n; ++i) {
            x[i] = dist(rng);
            y[i] = dist(rng);
        }
        const double tol = 1e-12 * (1.0 + static_cast<double>(n));
        CHECK(k::avx2::dot(x, y) == doctest::Approx(k::ref::dot(x, y)).epsilon(tol));
        CHECK(k::avx2::sum_squares(x) ==
              doctest::Approx(k::ref::sum_squares(x)).epsilon(tol));
        CHECK(k::avx2::inf_norm(x) == k::ref::inf_norm(x));

        std::vector<double> y1 = y, y2 = y;
        k::avx2::axpy(-2.5, x, y1);
        k::ref::axpy(-2.5, x, y2);
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(y1[i] == doctest::Approx(y2[i]).epsilon(1e-14));
        }
    }
}
#endif

TEST_CASE("backend can be forced to scalar") {
    k::use_scalar_backend(true);
    CHECK(std::string(k::backend_name()) == "scalar");
    std::vector<double> x{1.0, 2.0};
    CHECK(k::dot(x, x) == doctest::Approx(5.0));
    k::use_scalar_backend(false);
}
