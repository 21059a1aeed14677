// Copyright the tweetkit authors. Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.

#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace tweetkit::models {

/// Smooth objective: writes the gradient into `grad`, returns the loss.
using Objective = std::function<double(std::span<const double> x, std::span<double> grad)>;

struct MinimizeOptions {
    double tolerance = 1e-6; // on the gradient infinity-norm
    int max_iterations = 1000;
    int history = 10; // L-BFGS memory
    // Optional L1 term strength * sum |x_j| over [l1_begin, l1_end), handled by
    // proximal shrinkage steps; convergence then uses the generalized gradient.
    double l1_strength = 0.0;
    std::size_t l1_begin = 0;
    std::size_t l1_end = 0;
};

struct MinimizeResult {
    double loss = 0.0;          // final objective (including any L1 term)
    double grad_inf_norm = 0.0; // (generalized) gradient at the final point
    int iterations = 0;
    bool converged = false;
};

/// Deterministic full-batch minimizer: limited-memory BFGS with backtracking
/// line search for smooth objectives, proximal gradient with backtracking for
/// objectives carrying an L1 term. `x` is the starting point and receives the
/// solution.
MinimizeResult minimize(const Objective& objective, std::vector<double>& x,
                        const MinimizeOptions& options);

} // namespace tweetkit::models
