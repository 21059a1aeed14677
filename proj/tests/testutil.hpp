// Copyright the tweetkit authors. Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.

#pragma once

#include "tweetkit/corpus/dataset.hpp"

#include <atomic>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>

namespace testutil {

/// Self-deleting temp directory for file-based tests.
class TempDir {
public:
    TempDir() {
        auto base = std::filesystem::temp_directory_path();
        static std::atomic<unsigned> counter{0};
        static const unsigned run_tag = std::random_device{}();
        path_ = base / ("tweetkit_test_" + std::to_string(run_tag) + "_" +
                        std::to_string(counter.fetch_add(1)));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    const std::filesystem::path& path() const { return path_; }
    std::filesystem::path file(const std::string& name) const { return path_ / name; }

private:
    std::filesystem::path path_;
};

inline void write_file(const std::filesystem::path& p, const std::string& bytes) {
    std::ofstream out(p, std::ios::binary);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

inline tweetkit::corpus::LabelSchema simple_schema(std::vector<std::string> labels) {
    tweetkit::corpus::LabelSchema schema;
    schema.name = "test";
    schema.labels = std::move(labels);
    schema.column_map = {{"id", "id"}, {"text", "text"}, {"label", "label"}};
    return schema;
}

/// n documents, labels drawn round-robin-ish from the schema by `weights`.
inline tweetkit::corpus::LabeledDataset synthetic_dataset(
    const std::vector<std::pair<std::string, std::size_t>>& class_counts) {
    std::vector<std::string> labels;
    for (const auto& [label, count] : class_counts) labels.push_back(label);
    tweetkit::corpus::LabeledDataset ds;
    ds.schema = simple_schema(labels);
    std::size_t id = 0;
    for (const auto& [label, count] : class_counts) {
        for (std::size_t i = 0; i < count; ++i) {
            tweetkit::corpus::Document doc;
            doc.id = "d" + std::to_string(id++);
            doc.text = "text about " + label + " number " + std::to_string(i);
            doc.label = label;
            ds.documents.push_back(std::move(doc));
        }
    }
    return ds;
}

} // namespace testutil
