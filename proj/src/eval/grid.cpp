// Copyright the tweetkit authors. Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.

#include "tweetkit/eval/grid.hpp"

#include "tweetkit/error.hpp"
#include "tweetkit/parallel.hpp"

namespace tweetkit::eval {

namespace {

// Missing axes fall back to the base config's value.
template <typename T, typename Getter>
std::vector<T> axis_or(const std::vector<T>& axis, Getter base_value) {
    if (!axis.empty()) return axis;
    return {base_value()};
}

} // namespace

std::size_t GridSpec::size() const {
    auto dim = [](std::size_t n) { return n == 0 ? std::size_t{1} : n; };
    return dim(penalty.size()) * dim(C.size()) * dim(class_weights.size()) *
           dim(min_count.size()) * dim(ngram_range.size()) * dim(remove_stopwords.size()) *
           dim(weighting.size());
}

std::vector<PipelineConfig> enumerate_grid(const PipelineConfig& base, const GridSpec& grid) {
    const auto penalties = axis_or(grid.penalty, [&] { return base.logreg.penalty; });
    const auto cs = axis_or(grid.C, [&] { return base.logreg.C; });
    const auto cws = axis_or(grid.class_weights, [&] { return base.logreg.class_weight_mode; });
    const auto mcs = axis_or(grid.min_count, [&] { return base.min_count; });
    const auto ngrams = axis_or(grid.ngram_range, [&] { return base.ngram; });
    const auto stops = axis_or(grid.remove_stopwords, [&] { return base.prep.remove_stopwords; });
    const auto weightings = axis_or(grid.weighting, [&] { return base.weighting; });

    std::vector<PipelineConfig> out;
    out.reserve(grid.size());
    for (const auto& penalty : penalties)
        for (const double c : cs)
            for (const auto& cw : cws)
                for (const auto mc : mcs)
                    for (const auto& ngram : ngrams)
                        for (const bool stop : stops)
                            for (const auto& weighting : weightings) {
                                PipelineConfig cfg = base;
                                cfg.logreg.penalty = penalty;
                                cfg.logreg.C = c;
                                cfg.logreg.class_weight_mode = cw;
                                cfg.min_count = mc;
                                cfg.ngram = ngram;
                                cfg.prep.remove_stopwords = stop;
                                cfg.weighting = weighting;
                                out.push_back(std::move(cfg));
                            }
    return out;
}

GridResult grid_search(const corpus::LabeledDataset& dataset, const PipelineConfig& base,
                       const GridSpec& grid, const FoldSpec& folds, const PipelineRunner& runner,
                       int jobs) {
    const std::vector<PipelineConfig> points = enumerate_grid(base, grid);
    if (points.empty()) throw UsageError("grid_search: empty grid");

    GridResult result;
    result.scoring = grid.scoring;
    result.table.resize(points.size());

    parallel_for(points.size(), jobs, [&](std::size_t p) {
        // folds within a point run serially; concurrency is across points
        CvResult cv = kfold_cv(dataset, points[p], folds, grid.scoring, runner, 1);
        result.table[p] =
            GridResult::Row{points[p], cv.mean, cv.stddev, std::move(cv.fold_scores)};
    });

    result.best_index = 0;
    for (std::size_t p = 1; p < result.table.size(); ++p) {
        if (result.table[p].mean > result.table[result.best_index].mean) result.best_index = p;
    }
    result.best_config = result.table[result.best_index].config;
    result.best_mean = result.table[result.best_index].mean;
    return result;
}

} // namespace tweetkit::eval
