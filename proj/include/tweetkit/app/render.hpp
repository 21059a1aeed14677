// Copyright the tweetkit authors. Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.

#pragma once

#include "tweetkit/app/manifest.hpp"
#include "tweetkit/eval/metrics.hpp"
#include "tweetkit/pipeline_config.hpp"

#include "json.hpp"

#include <string>

namespace tweetkit::app {

/// Aligned per-class table with weighted and macro average rows, mirroring the
/// published table layout.
std::string render_report(const eval::EvalReport& report);

/// One-line summary of a pipeline configuration.
std::string describe(const PipelineConfig& config);

nlohmann::json report_to_json(const eval::EvalReport& report);
nlohmann::json config_to_summary_json(const PipelineConfig& config);
nlohmann::json reference_to_json(const ReferenceScore& ref);

/// {"tweetkit": ..., "stopwords": ..., "simd": ...}
nlohmann::json versions_json();

inline constexpr const char* kVersion = "1.0.0";

} // namespace tweetkit::app
