// Copyright the tweetkit authors. Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.

#pragma once

#include "tweetkit/features/vectorizer.hpp"
#include "tweetkit/models/logistic_regression.hpp"
#include "tweetkit/textprep/pipeline.hpp"

#include <cstdint>

namespace tweetkit {

enum class Weighting { counts, tfidf };

enum class ModelKind { mnb, logreg };

/// Everything it takes to turn labeled text into a trained classifier:
/// preprocessing switches, vocabulary policy, term weighting and the model.
struct PipelineConfig {
    textprep::PrepConfig prep;
    features::NgramRange ngram;
    std::uint64_t min_count = 1;
    Weighting weighting = Weighting::counts;
    ModelKind model = ModelKind::mnb;
    double mnb_alpha = 1.0;
    models::TrainConfig logreg;
};

} // namespace tweetkit
