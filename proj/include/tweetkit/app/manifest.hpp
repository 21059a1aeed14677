// Copyright the tweetkit authors. Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.

#pragma once

#include "tweetkit/corpus/dataset.hpp"
#include "tweetkit/eval/metrics.hpp"
#include "tweetkit/pipeline_config.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tweetkit::app {

/// A published score this toolkit compares itself against. `tolerance` is the
/// accepted band half-width for computed scores; reference-only rows
/// (computed == false) are printed but never evaluated.
struct ReferenceScore {
    std::string key;         // stable id used by the reproduce logic
    std::string description; // human-readable, e.g. "baseline weighted F1 (holdout)"
    std::string source;      // table / section citation
    double value = 0.0;
    double tolerance = 0.0;
    bool computed = true;
};

struct DatasetEntry {
    std::string name;
    std::string source_url;                 // public origin of the files
    std::vector<std::string> files;         // expected filenames under the data dir
    corpus::LabelSchema schema;
    std::map<std::string, std::string> three_class_merge; // empty unless used
    PipelineConfig baseline;
    PipelineConfig tuned;
    eval::Scoring scoring;                  // the score the study tracked
    std::vector<ReferenceScore> references;
};

/// The three datasets, their expected files, canned baseline/tuned pipelines
/// and published reference scores.
const std::vector<DatasetEntry>& manifest();

/// Entry by name; throws UsageError listing the valid names.
const DatasetEntry& manifest_entry(const std::string& name);

const ReferenceScore& reference(const DatasetEntry& entry, const std::string& key);

/// Default seed echoed in every report.
inline constexpr std::uint64_t kDefaultSeed = 42;

} // namespace tweetkit::app
