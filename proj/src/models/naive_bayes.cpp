// Copyright the tweetkit authors. Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.

#include "tweetkit/models/naive_bayes.hpp"

#include "tweetkit/error.hpp"

#include <cmath>

namespace tweetkit::models {

MnbModel train_mnb(const features::FeatureMatrix& X, const std::vector<std::int32_t>& y,
                   std::vector<std::string> classes, double alpha) {
    if (X.rows.empty()) throw UsageError("train_mnb: empty training set");
    if (X.rows.size() != y.size()) throw UsageError("train_mnb: X and y sizes differ");
    if (!(alpha > 0.0)) throw UsageError("train_mnb: alpha must be positive");

    const std::size_t K = classes.size();
    const std::size_t V = X.n_cols;
    std::vector<double> class_docs(K, 0.0);
    std::vector<double> term_weight(K * V, 0.0); // c_kj
    std::vector<double> class_weight(K, 0.0);    // c_k

    for (std::size_t i = 0; i < X.rows.size(); ++i) {
        const auto c = static_cast<std::size_t>(y[i]);
        if (y[i] < 0 || c >= K) throw UsageError("train_mnb: class index out of range");
        class_docs[c] += 1.0;
        for (const auto& [j, w] : X.rows[i].entries) {
            term_weight[c * V + j] += w;
            class_weight[c] += w;
        }
    }
    for (std::size_t c = 0; c < K; ++c) {
        if (class_docs[c] == 0.0) {
            throw UsageError("train_mnb: class \"" + classes[c] + "\" has no training rows");
        }
    }

    MnbModel model;
    model.classes = std::move(classes);
    model.n_features = V;
    model.alpha = alpha;
    model.log_prior.resize(K);
    model.log_prob.resize(K * V);
    const double n = static_cast<double>(X.rows.size());
    for (std::size_t c = 0; c < K; ++c) {
        model.log_prior[c] = std::log(class_docs[c] / n);
        const double denom = std::log(class_weight[c] + alpha * static_cast<double>(V));
        for (std::size_t j = 0; j < V; ++j) {
            model.log_prob[c * V + j] = std::log(term_weight[c * V + j] + alpha) - denom;
        }
    }
    return model;
}

MnbPrediction predict_mnb(const MnbModel& model, const features::FeatureVector& x) {
    const std::size_t K = model.classes.size();
    const std::size_t V = model.n_features;
    MnbPrediction pred;
    pred.log_scores = model.log_prior;
    for (const auto& [j, w] : x.entries) {
        if (j >= V) throw UsageError("predict_mnb: feature index out of range");
        for (std::size_t c = 0; c < K; ++c) {
            pred.log_scores[c] += w * model.log_prob[c * V + j];
        }
    }
    pred.label = 0;
    for (std::size_t c = 1; c < K; ++c) {
        if (pred.log_scores[c] > pred.log_scores[static_cast<std::size_t>(pred.label)]) {
            pred.label = static_cast<std::int32_t>(c);
        }
    }
    return pred;
}

} // namespace tweetkit::models
