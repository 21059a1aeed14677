// Copyright the tweetkit authors. Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.

#pragma once

#include "tweetkit/features/vectorizer.hpp"

namespace tweetkit::features {

/// Smoothed inverse document frequencies fit on the training matrix only:
/// idf[j] = ln((1 + n_docs) / (1 + df[j])) + 1, always positive.
struct IdfModel {
    std::vector<double> idf;
    std::uint64_t n_docs = 0;
};

IdfModel fit_idf(const FeatureMatrix& matrix);

/// count -> count * idf, then scaled to unit Euclidean norm. Zero vectors pass
/// through unchanged.
FeatureVector apply_tfidf(const FeatureVector& counts, const IdfModel& idf);

} // namespace tweetkit::features
