// Copyright the tweetkit authors. Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.

#include "tweetkit/models/optimizer.hpp"

#include "tweetkit/kernels/vecops.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

namespace tweetkit::models {

namespace {

namespace k = tweetkit::kernels;

double l1_term(std::span<const double> x, const MinimizeOptions& o) {
    double acc = 0.0;
    for (std::size_t j = o.l1_begin; j < o.l1_end; ++j) acc += std::fabs(x[j]);
    return o.l1_strength * acc;
}

// Minimum-norm subgradient of smooth-grad + l1 over the penalized range.
double generalized_grad_inf(std::span<const double> x, std::span<const double> g,
                            const MinimizeOptions& o) {
    double m = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) {
        double gj = g[j];
        if (j >= o.l1_begin && j < o.l1_end) {
            if (x[j] > 0.0) gj += o.l1_strength;
            else if (x[j] < 0.0) gj -= o.l1_strength;
            else gj = std::max(std::fabs(gj) - o.l1_strength, 0.0);
        }
        m = std::max(m, std::fabs(gj));
    }
    return m;
}

MinimizeResult minimize_lbfgs(const Objective& f, std::vector<double>& x,
                              const MinimizeOptions& o) {
    const std::size_t n = x.size();
    std::vector<double> g(n), g_next(n), x_next(n), d(n);
    std::deque<std::pair<std::vector<double>, std::vector<double>>> pairs; // (s, y)

    MinimizeResult res;
    double loss = f(x, g);
    res.grad_inf_norm = k::inf_norm(g);

    for (int iter = 0; iter < o.max_iterations; ++iter) {
        if (res.grad_inf_norm <= o.tolerance) {
            res.converged = true;
            break;
        }
        res.iterations = iter + 1;

        // Two-loop recursion.
        std::copy(g.begin(), g.end(), d.begin());
        std::vector<double> alpha(pairs.size());
        for (std::size_t p = pairs.size(); p-- > 0;) {
            const auto& [s, y] = pairs[p];
            const double rho = 1.0 / k::dot(s, y);
            alpha[p] = rho * k::dot(s, d);
            k::axpy(-alpha[p], y, d);
        }
        if (!pairs.empty()) {
            const auto& [s, y] = pairs.back();
            const double gamma = k::dot(s, y) / k::dot(y, y);
            k::scale(gamma, d);
        }
        for (std::size_t p = 0; p < pairs.size(); ++p) {
            const auto& [s, y] = pairs[p];
            const double rho = 1.0 / k::dot(s, y);
            const double beta = rho * k::dot(y, d);
            k::axpy(alpha[p] - beta, s, d);
        }
        k::scale(-1.0, d);

        double gd = k::dot(g, d);
        if (gd >= 0.0) { // not a descent direction; reset to steepest descent
            pairs.clear();
            for (std::size_t j = 0; j < n; ++j) d[j] = -g[j];
            gd = -k::dot(g, g);
        }

        // Backtracking Armijo search.
        constexpr double c1 = 1e-4;
        double t = 1.0;
        double next_loss = 0.0;
        bool accepted = false;
        for (int ls = 0; ls < 60; ++ls) {
            std::copy(x.begin(), x.end(), x_next.begin());
            k::axpy(t, d, x_next);
            next_loss = f(x_next, g_next);
            if (std::isfinite(next_loss) && next_loss <= loss + c1 * t * gd) {
                accepted = true;
                break;
            }
            t *= 0.5;
        }
        if (!accepted) break; // no further progress possible at fp precision

        std::vector<double> s(n), yv(n);
        for (std::size_t j = 0; j < n; ++j) {
            s[j] = x_next[j] - x[j];
            yv[j] = g_next[j] - g[j];
        }
        const double sy = k::dot(s, yv);
        if (sy > 1e-12 * std::sqrt(k::sum_squares(s) * k::sum_squares(yv))) {
            pairs.emplace_back(std::move(s), std::move(yv));
            if (pairs.size() > static_cast<std::size_t>(o.history)) pairs.pop_front();
        }

        x.swap(x_next);
        g.swap(g_next);
        loss = next_loss;
        res.grad_inf_norm = k::inf_norm(g);
    }

    res.converged = res.converged || res.grad_inf_norm <= o.tolerance;
    res.loss = loss;
    return res;
}

// Proximal gradient (shrinkage steps) with backtracking on the step size.
MinimizeResult minimize_proximal(const Objective& f, std::vector<double>& x,
                                 const MinimizeOptions& o) {
    const std::size_t n = x.size();
    std::vector<double> g(n), g_next(n), x_next(n);

    MinimizeResult res;
    double smooth = f(x, g);
    res.grad_inf_norm = generalized_grad_inf(x, g, o);
    double lipschitz = 1.0;

    auto shrink = [&](double step) {
        const double thr = step * o.l1_strength;
        for (std::size_t j = 0; j < n; ++j) {
            double v = x[j] - step * g[j];
            if (j >= o.l1_begin && j < o.l1_end) {
                if (v > thr) v -= thr;
                else if (v < -thr) v += thr;
                else v = 0.0;
            }
            x_next[j] = v;
        }
    };

    for (int iter = 0; iter < o.max_iterations; ++iter) {
        if (res.grad_inf_norm <= o.tolerance) {
            res.converged = true;
            break;
        }
        res.iterations = iter + 1;

        double next_smooth = 0.0;
        bool accepted = false;
        for (int bt = 0; bt < 60; ++bt) {
            shrink(1.0 / lipschitz);
            next_smooth = f(x_next, g_next);
            // quadratic majorization check at step 1/L
            double dq = 0.0, dn = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                const double dx = x_next[j] - x[j];
                dq += g[j] * dx;
                dn += dx * dx;
            }
            if (std::isfinite(next_smooth) && next_smooth <= smooth + dq + 0.5 * lipschitz * dn) {
                accepted = true;
                break;
            }
            lipschitz *= 2.0;
        }
        if (!accepted) break;

        x.swap(x_next);
        g.swap(g_next);
        smooth = next_smooth;
        res.grad_inf_norm = generalized_grad_inf(x, g, o);
        lipschitz = std::max(lipschitz * 0.9, 1e-8);
    }

    res.converged = res.converged || res.grad_inf_norm <= o.tolerance;
    res.loss = smooth + l1_term(x, o);
    return res;
}

} // namespace

MinimizeResult minimize(const Objective& objective, std::vector<double>& x,
                        const MinimizeOptions& options) {
    if (options.l1_strength > 0.0) return minimize_proximal(objective, x, options);
    return minimize_lbfgs(objective, x, options);
}

} // namespace tweetkit::models
