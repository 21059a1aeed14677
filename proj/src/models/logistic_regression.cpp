// Copyright the tweetkit authors. Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.

#include "tweetkit/models/logistic_regression.hpp"

#include "tweetkit/error.hpp"
#include "tweetkit/kernels/vecops.hpp"

#include <algorithm>
#include <cmath>

namespace tweetkit::models {

namespace k = tweetkit::kernels;

std::vector<double> resolve_class_weights(const TrainConfig& config,
                                          const std::vector<std::int32_t>& y, std::size_t K) {
    switch (config.class_weight_mode) {
    case ClassWeightMode::none:
        return std::vector<double>(K, 1.0);
    case ClassWeightMode::custom:
        if (config.custom_class_weights.size() != K) {
            throw UsageError("class weights: expected one weight per class");
        }
        return config.custom_class_weights;
    case ClassWeightMode::balanced: {
        std::vector<double> counts(K, 0.0);
        for (std::int32_t c : y) counts[static_cast<std::size_t>(c)] += 1.0;
        std::vector<double> w(K, 0.0);
        const double n = static_cast<double>(y.size());
        for (std::size_t c = 0; c < K; ++c) {
            w[c] = counts[c] > 0.0 ? n / (static_cast<double>(K) * counts[c]) : 0.0;
        }
        return w;
    }
    }
    return std::vector<double>(K, 1.0);
}

namespace {

// Softmax NLL + l2 term when smooth_l2; the l1 term lives in the optimizer's
// proximal step and in the public loss_and_gradient's subgradient.
double data_loss_and_gradient(std::span<const double> params, const features::FeatureMatrix& X,
                              const std::vector<std::int32_t>& y, std::size_t K,
                              const std::vector<double>& class_weights, std::span<double> grad) {
    const std::size_t V = X.n_cols;
    std::fill(grad.begin(), grad.end(), 0.0);

    std::vector<double> scores(K), p(K);
    double loss = 0.0;
    for (std::size_t i = 0; i < X.rows.size(); ++i) {
        const auto yi = static_cast<std::size_t>(y[i]);
        const double cw = class_weights[yi];
        for (std::size_t c = 0; c < K; ++c) scores[c] = params[K * V + c]; // bias
        for (const auto& [j, w] : X.rows[i].entries) {
            for (std::size_t c = 0; c < K; ++c) scores[c] += w * params[c * V + j];
        }
        const double mx = *std::max_element(scores.begin(), scores.end());
        double z = 0.0;
        for (std::size_t c = 0; c < K; ++c) {
            p[c] = std::exp(scores[c] - mx);
            z += p[c];
        }
        loss += cw * (std::log(z) + mx - scores[yi]);
        const double inv_z = 1.0 / z;
        for (std::size_t c = 0; c < K; ++c) {
            const double d = cw * (p[c] * inv_z - (c == yi ? 1.0 : 0.0));
            p[c] = d; // reuse as per-class score gradient
            grad[K * V + c] += d;
        }
        for (const auto& [j, w] : X.rows[i].entries) {
            for (std::size_t c = 0; c < K; ++c) grad[c * V + j] += p[c] * w;
        }
    }
    return loss;
}

} // namespace

double loss_and_gradient(std::span<const double> params, const features::FeatureMatrix& X,
                         const std::vector<std::int32_t>& y, std::size_t K,
                         const TrainConfig& config, std::span<double> grad) {
    if (params.size() != K * X.n_cols + K || grad.size() != params.size()) {
        throw UsageError("loss_and_gradient: parameter shape mismatch");
    }
    const std::vector<double> cw = resolve_class_weights(config, y, K);
    double loss = data_loss_and_gradient(params, X, y, K, cw, grad);

    const std::size_t nw = K * X.n_cols; // bias excluded from every penalty
    const double inv_c = 1.0 / config.C;
    if (config.penalty == Penalty::l2) {
        loss += 0.5 * inv_c * k::sum_squares(params.subspan(0, nw));
        k::axpy(inv_c, params.subspan(0, nw), grad.subspan(0, nw));
    } else if (config.penalty == Penalty::l1) {
        double abs_sum = 0.0;
        for (std::size_t j = 0; j < nw; ++j) {
            abs_sum += std::fabs(params[j]);
            if (params[j] > 0.0) grad[j] += inv_c;
            else if (params[j] < 0.0) grad[j] -= inv_c;
        }
        loss += inv_c * abs_sum;
    }
    return loss;
}

LogRegModel train_logreg(const features::FeatureMatrix& X, const std::vector<std::int32_t>& y,
                         std::vector<std::string> classes, const TrainConfig& config) {
    if (X.rows.empty()) throw UsageError("train_logreg: empty training set");
    if (X.rows.size() != y.size()) throw UsageError("train_logreg: X and y sizes differ");
    if (classes.size() < 2) throw UsageError("train_logreg: need at least two classes");
    if (!(config.C > 0.0)) throw UsageError("train_logreg: C must be positive");
    if (!(config.tolerance > 0.0)) throw UsageError("train_logreg: tolerance must be positive");
    {
        std::vector<bool> seen(classes.size(), false);
        for (std::int32_t c : y) {
            if (c < 0 || static_cast<std::size_t>(c) >= classes.size()) {
                throw UsageError("train_logreg: class index out of range");
            }
            seen[static_cast<std::size_t>(c)] = true;
        }
        const auto present = static_cast<std::size_t>(
            std::count(seen.begin(), seen.end(), true));
        if (present < 2) throw UsageError("train_logreg: training labels are single-class");
    }

    const std::size_t K = classes.size();
    const std::size_t V = X.n_cols;
    const std::vector<double> cw = resolve_class_weights(config, y, K);

    Objective objective = [&](std::span<const double> params, std::span<double> grad) {
        double loss = data_loss_and_gradient(params, X, y, K, cw, grad);
        if (config.penalty == Penalty::l2) {
            const std::size_t nw = K * V;
            const double inv_c = 1.0 / config.C;
            loss += 0.5 * inv_c * k::sum_squares(params.subspan(0, nw));
            k::axpy(inv_c, params.subspan(0, nw), grad.subspan(0, nw));
        }
        return loss; // l1 handled by the proximal step
    };

    MinimizeOptions opts;
    opts.tolerance = config.tolerance;
    opts.max_iterations = config.max_iterations;
    if (config.penalty == Penalty::l1) {
        opts.l1_strength = 1.0 / config.C;
        opts.l1_begin = 0;
        opts.l1_end = K * V;
    }

    std::vector<double> params(K * V + K, 0.0);
    const MinimizeResult res = minimize(objective, params, opts);

    LogRegModel model;
    model.classes = std::move(classes);
    model.n_features = V;
    model.weights.assign(params.begin(), params.begin() + static_cast<std::ptrdiff_t>(K * V));
    model.bias.assign(params.begin() + static_cast<std::ptrdiff_t>(K * V), params.end());
    model.penalty = config.penalty;
    model.C = config.C;
    model.class_weights = cw;
    model.fit = {res.iterations, res.grad_inf_norm, res.converged, res.loss};
    return model;
}

std::vector<double> softmax(std::span<const double> scores) {
    std::vector<double> p(scores.size());
    const double mx = *std::max_element(scores.begin(), scores.end());
    double z = 0.0;
    for (std::size_t c = 0; c < scores.size(); ++c) {
        p[c] = std::exp(scores[c] - mx);
        z += p[c];
    }
    for (double& v : p) v /= z;
    return p;
}

LogRegPrediction predict_logreg(const LogRegModel& model, const features::FeatureVector& x) {
    const std::size_t K = model.classes.size();
    const std::size_t V = model.n_features;
    std::vector<double> scores = model.bias;
    for (const auto& [j, w] : x.entries) {
        if (j >= V) throw UsageError("predict_logreg: feature index out of range");
        for (std::size_t c = 0; c < K; ++c) scores[c] += w * model.weights[c * V + j];
    }
    LogRegPrediction pred;
    pred.probabilities = softmax(scores);
    pred.label = 0;
    for (std::size_t c = 1; c < K; ++c) {
        if (pred.probabilities[c] > pred.probabilities[static_cast<std::size_t>(pred.label)]) {
            pred.label = static_cast<std::int32_t>(c);
        }
    }
    return pred;
}

} // namespace tweetkit::models
