// Copyright the tweetkit authors. Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.

#pragma once

#include "tweetkit/eval/crossval.hpp"

namespace tweetkit::eval {

/// Axes of an exhaustive grid over pipeline hyperparameters. An empty axis
/// keeps the base config's value (a one-value axis). Enumeration order is
/// nested loops in field order below, last axis fastest; ties in mean score
/// go to the earliest enumerated config.
struct GridSpec {
    std::vector<models::Penalty> penalty;
    std::vector<double> C;
    std::vector<models::ClassWeightMode> class_weights;
    std::vector<std::uint64_t> min_count;
    std::vector<features::NgramRange> ngram_range;
    std::vector<bool> remove_stopwords;
    std::vector<Weighting> weighting;
    Scoring scoring = Scoring::weighted_f1;

    std::size_t size() const;
};

std::vector<PipelineConfig> enumerate_grid(const PipelineConfig& base, const GridSpec& grid);

struct GridResult {
    struct Row {
        PipelineConfig config;
        double mean = 0.0;
        double stddev = 0.0;
        std::vector<double> fold_scores;
    };
    std::size_t best_index = 0;
    PipelineConfig best_config;
    double best_mean = 0.0;
    std::vector<Row> table; // full results, in enumeration order
    Scoring scoring = Scoring::weighted_f1;
};

/// Cross-validates every grid point and returns the argmax plus the full
/// table. Grid points may run concurrently; results keep enumeration order.
GridResult grid_search(const corpus::LabeledDataset& dataset, const PipelineConfig& base,
                       const GridSpec& grid, const FoldSpec& folds, const PipelineRunner& runner,
                       int jobs = 1);

} // namespace tweetkit::eval
