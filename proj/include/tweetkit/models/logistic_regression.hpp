// Copyright the tweetkit authors. Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.

#pragma once

#include "tweetkit/features/vectorizer.hpp"
#include "tweetkit/models/optimizer.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace tweetkit::models {

enum class Penalty { none, l1, l2 };

enum class ClassWeightMode {
    none,     // every class weighs 1
    balanced, // N / (K * N_k)
    custom,   // explicit per-class weights
};

struct TrainConfig {
    Penalty penalty = Penalty::l2;
    double C = 1.0; // inverse regularization strength; the penalty is weighted 1/C
    ClassWeightMode class_weight_mode = ClassWeightMode::none;
    std::vector<double> custom_class_weights;
    double tolerance = 1e-6;
    int max_iterations = 1000;
    std::uint64_t seed = 0; // reserved for stochastic paths; training itself is deterministic
};

struct FitInfo {
    int iterations = 0;
    double grad_inf_norm = 0.0;
    bool converged = true;
    double final_loss = 0.0;
};

/// Multinomial (softmax) logistic regression. The objective is
///   sum_i c_{y_i} * NLL_i + (1/C) * R(W)
/// with R = 0, sum|w| or 0.5*sum w^2; the bias is never penalized.
struct LogRegModel {
    std::vector<std::string> classes;
    std::size_t n_features = 0;
    std::vector<double> weights; // K x V, row-major
    std::vector<double> bias;    // K
    Penalty penalty = Penalty::l2;
    double C = 1.0;
    std::vector<double> class_weights; // resolved per class; empty = uniform
    FitInfo fit;
};

/// Resolved per-class weights for the given mode ("balanced" = N/(K*N_k)).
std::vector<double> resolve_class_weights(const TrainConfig& config,
                                          const std::vector<std::int32_t>& y, std::size_t K);

/// Objective value and exact analytic gradient at `params`, laid out as
/// [W row-major | b]. For the L1 penalty the subgradient sign(w) (0 at 0) is
/// used. `grad` must have params.size() elements.
double loss_and_gradient(std::span<const double> params, const features::FeatureMatrix& X,
                         const std::vector<std::int32_t>& y, std::size_t K,
                         const TrainConfig& config, std::span<double> grad);

/// Deterministic full-batch training from zero initialization. Non-convergence
/// within max_iterations is reported in fit, not an error.
LogRegModel train_logreg(const features::FeatureMatrix& X, const std::vector<std::int32_t>& y,
                         std::vector<std::string> classes, const TrainConfig& config);

struct LogRegPrediction {
    std::int32_t label = 0;            // argmax, ties to the lowest class index
    std::vector<double> probabilities; // softmax, computed with max subtraction
};

LogRegPrediction predict_logreg(const LogRegModel& model, const features::FeatureVector& x);

/// Stable softmax of per-class scores (shared with prediction-confidence code).
std::vector<double> softmax(std::span<const double> scores);

} // namespace tweetkit::models
