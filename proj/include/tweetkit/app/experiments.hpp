// Copyright the tweetkit authors. Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.

#pragma once

#include "tweetkit/app/bundle.hpp"
#include "tweetkit/app/manifest.hpp"
#include "tweetkit/app/pipeline.hpp"
#include "tweetkit/corpus/csv.hpp"

#include <filesystem>
#include <iosfwd>

namespace tweetkit::app {

struct TwoStageResult {
    eval::EvalReport two_stage; // cascade scored over all original classes
    eval::EvalReport single;    // one classifier over all classes
};

/// The news/non-news cascade: stage 1 separates News from the rest, stage 2 is
/// trained on non-News rows only and labels whatever stage 1 passed through.
/// Requires a schema with a "News" class plus at least two others.
TwoStageResult run_two_stage(const corpus::LabeledDataset& train,
                             const corpus::LabeledDataset& holdout,
                             const PipelineConfig& config);

struct ErrorCase {
    std::string text;
    std::string true_label;
    std::string predicted_label;
    double confidence = 0.0; // predicted-class probability
};

/// The n misclassified holdout documents the model was most confident about,
/// in descending confidence order. May return fewer than n.
std::vector<ErrorCase> dump_errors(const FittedPipeline& pipeline,
                                   const corpus::LabeledDataset& holdout, std::size_t n);

struct CheckLine {
    std::string description;
    std::string source;
    double observed = 0.0;
    double expected = 0.0;
    double tolerance = 0.0;
    bool computed = true; // false: printed as a paper-reported constant
    bool ok = true;
};

struct ReproduceResult {
    std::string dataset;
    std::uint64_t seed = 0;
    std::vector<CheckLine> checks;
    bool all_ok = true;
};

/// Runs the manifest's baseline and tuned configurations for one dataset,
/// prints observed scores beside the published references (BERT rows are
/// labeled "paper-reported, not computed") and reports whether every computed
/// score landed inside its acceptance band. Table and progress text goes to
/// `out`.
ReproduceResult reproduce(const std::string& dataset_name,
                          const std::filesystem::path& data_dir, std::uint64_t seed, int jobs,
                          std::ostream& out);

/// Loads the manifest dataset from disk; the error message for a missing file
/// names the expected filename and its public source.
corpus::LabeledDataset load_dataset(const DatasetEntry& entry,
                                    const std::filesystem::path& data_dir,
                                    corpus::LoadReport* report = nullptr);

/// Writes a competition submission file ("id,target") for the disaster test
/// set using the given trained pipeline.
void write_submission(const FittedPipeline& pipeline, const std::filesystem::path& test_csv,
                      const std::filesystem::path& out_csv);

} // namespace tweetkit::app
