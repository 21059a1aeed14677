// Copyright the tweetkit authors. Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.

#pragma once

#include "tweetkit/features/vectorizer.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace tweetkit::models {

/// Multinomial Naive Bayes with Laplace/Lidstone smoothing.
/// log_prior[k] = ln(N_k / N); log_prob[k*V+j] = ln((c_kj + a) / (c_k + a*V)),
/// so each class row exponentiates and sums to one.
struct MnbModel {
    std::vector<std::string> classes;
    std::size_t n_features = 0;
    std::vector<double> log_prior; // K
    std::vector<double> log_prob;  // K x V, row-major
    double alpha = 1.0;
};

MnbModel train_mnb(const features::FeatureMatrix& X, const std::vector<std::int32_t>& y,
                   std::vector<std::string> classes, double alpha);

struct MnbPrediction {
    std::int32_t label = 0;             // argmax, ties to the lowest class index
    std::vector<double> log_scores;     // per-class joint log-likelihoods
};

MnbPrediction predict_mnb(const MnbModel& model, const features::FeatureVector& x);

} // namespace tweetkit::models
