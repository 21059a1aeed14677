// Copyright the tweetkit authors. Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.

#pragma once

#include "tweetkit/corpus/dataset.hpp"
#include "tweetkit/eval/metrics.hpp"
#include "tweetkit/pipeline_config.hpp"

#include <functional>

namespace tweetkit::eval {

struct FoldSpec {
    int k = 10;
    std::uint64_t seed = 42;
    bool stratified = true;
};

/// Disjoint document-index folds covering the dataset. Stratified folds assign
/// each class's seeded-shuffled members round-robin; indices within a fold
/// keep dataset order.
std::vector<std::vector<std::size_t>> make_folds(const corpus::LabeledDataset& dataset,
                                                 const FoldSpec& spec);

/// Fits on `train` and scores on `test` under `config`; supplied by the app
/// layer so fold mechanics stay independent of pipeline wiring.
using PipelineRunner = std::function<EvalReport(
    const corpus::LabeledDataset& train, const corpus::LabeledDataset& test,
    const PipelineConfig& config)>;

struct CvResult {
    double mean = 0.0;
    double stddev = 0.0; // population standard deviation over folds
    std::vector<double> fold_scores;
    std::vector<EvalReport> fold_reports;
    Scoring scoring = Scoring::weighted_f1;
};

/// k-fold cross-validation: for each fold the full pipeline (vocabulary fit
/// included) is refit on the other k-1 folds and scored on the held fold.
/// Folds may run concurrently (jobs > 1); assembly order is deterministic.
CvResult kfold_cv(const corpus::LabeledDataset& dataset, const PipelineConfig& config,
                  const FoldSpec& folds, Scoring scoring, const PipelineRunner& runner,
                  int jobs = 1);

} // namespace tweetkit::eval
