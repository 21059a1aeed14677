// Copyright the tweetkit authors. Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.

#include "tweetkit/eval/crossval.hpp"

#include "tweetkit/error.hpp"
#include "tweetkit/parallel.hpp"
#include "tweetkit/rng.hpp"

#include <algorithm>
#include <cmath>

namespace tweetkit::eval {

std::vector<std::vector<std::size_t>> make_folds(const corpus::LabeledDataset& dataset,
                                                 const FoldSpec& spec) {
    if (spec.k < 2) throw UsageError("kfold: k must be at least 2");
    if (static_cast<std::size_t>(spec.k) > dataset.size()) {
        throw UsageError("kfold: k exceeds dataset size");
    }

    const auto k = static_cast<std::size_t>(spec.k);
    std::vector<std::vector<std::size_t>> folds(k);
    std::mt19937_64 rng(spec.seed);

    if (!spec.stratified) {
        std::vector<std::size_t> order(dataset.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        deterministic_shuffle(order, rng);
        for (std::size_t i = 0; i < order.size(); ++i) folds[i % k].push_back(order[i]);
    } else {
        std::vector<std::vector<std::size_t>> by_class(dataset.schema.labels.size());
        for (std::size_t i = 0; i < dataset.size(); ++i) {
            const int c = dataset.schema.label_index(dataset.documents[i].label);
            if (c < 0) {
                throw DataError("kfold: label not in schema: " + dataset.documents[i].label);
            }
            by_class[static_cast<std::size_t>(c)].push_back(i);
        }
        for (std::size_t c = 0; c < by_class.size(); ++c) {
            if (!by_class[c].empty() && by_class[c].size() < k) {
                throw DataError("kfold: class \"" + dataset.schema.labels[c] + "\" has " +
                                std::to_string(by_class[c].size()) + " members, need at least " +
                                std::to_string(k));
            }
        }
        for (auto& members : by_class) {
            deterministic_shuffle(members, rng);
            for (std::size_t i = 0; i < members.size(); ++i) folds[i % k].push_back(members[i]);
        }
    }

    for (auto& fold : folds) std::sort(fold.begin(), fold.end());
    return folds;
}

CvResult kfold_cv(const corpus::LabeledDataset& dataset, const PipelineConfig& config,
                  const FoldSpec& folds_spec, Scoring scoring, const PipelineRunner& runner,
                  int jobs) {
    const auto folds = make_folds(dataset, folds_spec);
    const std::size_t k = folds.size();

    CvResult result;
    result.scoring = scoring;
    result.fold_scores.resize(k);
    result.fold_reports.resize(k);

    parallel_for(k, jobs, [&](std::size_t f) {
        std::vector<bool> held(dataset.size(), false);
        for (std::size_t idx : folds[f]) held[idx] = true;
        corpus::LabeledDataset train, test;
        train.schema = dataset.schema;
        test.schema = dataset.schema;
        for (std::size_t i = 0; i < dataset.size(); ++i) {
            (held[i] ? test : train).documents.push_back(dataset.documents[i]);
        }
        EvalReport report = runner(train, test, config);
        result.fold_scores[f] = score_of(report, scoring);
        result.fold_reports[f] = std::move(report);
    });

    double sum = 0.0;
    for (double s : result.fold_scores) sum += s;
    result.mean = sum / static_cast<double>(k);
    double var = 0.0;
    for (double s : result.fold_scores) var += (s - result.mean) * (s - result.mean);
    result.stddev = std::sqrt(var / static_cast<double>(k));
    return result;
}

} // namespace tweetkit::eval
