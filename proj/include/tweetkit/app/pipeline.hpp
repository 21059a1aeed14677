// Copyright the tweetkit authors. Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.

#pragma once

#include "tweetkit/corpus/dataset.hpp"
#include "tweetkit/eval/crossval.hpp"
#include "tweetkit/eval/metrics.hpp"
#include "tweetkit/features/tfidf.hpp"
#include "tweetkit/models/logistic_regression.hpp"
#include "tweetkit/models/naive_bayes.hpp"
#include "tweetkit/pipeline_config.hpp"

#include <optional>

namespace tweetkit::app {

/// A trained pipeline: frozen preprocessing, vocabulary, optional idf and the
/// model, everything prediction needs. Immutable once fit.
struct FittedPipeline {
    PipelineConfig config;
    std::vector<std::string> classes;
    features::Vocabulary vocab;
    std::optional<features::IdfModel> idf;
    std::optional<models::MnbModel> mnb;
    std::optional<models::LogRegModel> logreg;

    bool uses_logreg() const { return logreg.has_value(); }
};

struct Prediction {
    std::string label;
    std::vector<double> class_probabilities; // normalized, in classes order
    double confidence = 0.0;                 // probability of the argmax class
};

/// preprocess -> build_vocabulary -> vectorize (-> tfidf) -> train.
/// The class list is the schema's label order restricted to labels present in
/// the training rows.
FittedPipeline fit_pipeline(const corpus::LabeledDataset& train, const PipelineConfig& config);

Prediction predict_one(const FittedPipeline& pipeline, const std::string& text);

/// Applies the pipeline's frozen preprocessing and vocabulary to each holdout
/// document and scores predictions. Errors if the holdout contains a label the
/// pipeline never saw in training.
eval::EvalReport evaluate_pipeline(const FittedPipeline& pipeline,
                                   const corpus::LabeledDataset& holdout);

/// The standard fit-and-score runner handed to kfold_cv / grid_search.
eval::PipelineRunner pipeline_runner();

} // namespace tweetkit::app
