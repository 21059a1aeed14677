// Copyright the tweetkit authors. Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.

#include "tweetkit/features/tfidf.hpp"

#include <cmath>

namespace tweetkit::features {

IdfModel fit_idf(const FeatureMatrix& matrix) {
    IdfModel model;
    model.n_docs = matrix.rows.size();
    std::vector<std::uint64_t> df(matrix.n_cols, 0);
    for (const FeatureVector& row : matrix.rows) {
        for (const auto& [j, w] : row.entries) {
            if (w != 0.0) df[j] += 1;
        }
    }
    model.idf.resize(matrix.n_cols);
    const double n = static_cast<double>(model.n_docs);
    for (std::size_t j = 0; j < matrix.n_cols; ++j) {
        model.idf[j] = std::log((1.0 + n) / (1.0 + static_cast<double>(df[j]))) + 1.0;
    }
    return model;
}

FeatureVector apply_tfidf(const FeatureVector& counts, const IdfModel& idf) {
    FeatureVector out;
    out.entries.reserve(counts.entries.size());
    double norm_sq = 0.0;
    for (const auto& [j, w] : counts.entries) {
        const double v = w * idf.idf[j];
        norm_sq += v * v;
        out.entries.emplace_back(j, v);
    }
    if (norm_sq > 0.0) {
        const double inv = 1.0 / std::sqrt(norm_sq);
        for (auto& [j, v] : out.entries) v *= inv;
    }
    return out;
}

} // namespace tweetkit::features
