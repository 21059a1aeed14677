// Copyright the tweetkit authors. Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.

#pragma once

#include "tweetkit/app/pipeline.hpp"

#include <cstdint>
#include <filesystem>
#include <string>

namespace tweetkit::app {

inline constexpr int kBundleFormatVersion = 1;

/// A fitted pipeline plus training provenance, persisted as one JSON document
/// with an explicit format_version and a checksum over the payload.
struct ModelBundle {
    int format_version = kBundleFormatVersion;
    std::string dataset_name;
    std::uint64_t seed = 0;
    std::uint64_t train_rows = 0;
    std::int64_t created_unix = 0;
    FittedPipeline pipeline;
};

/// Round trip is lossless: a loaded bundle predicts bit-identically.
void save_bundle(const ModelBundle& bundle, const std::filesystem::path& path);

/// Throws BundleError on unknown format_version, checksum mismatch or a
/// truncated/garbled file.
ModelBundle load_bundle(const std::filesystem::path& path);

std::string bundle_to_json(const ModelBundle& bundle);
ModelBundle bundle_from_json(const std::string& text);

} // namespace tweetkit::app
