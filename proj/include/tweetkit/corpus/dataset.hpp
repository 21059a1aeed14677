// Copyright the tweetkit authors. Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tweetkit::corpus {

/// One tweet. Optional fields are empty strings when the source has no value.
struct Document {
    std::string id;
    std::string text;
    std::string label;
    std::string location;
    std::string keyword;
    std::string date; // verbatim, never parsed
};

/// Describes how a CSV file maps onto Documents and which labels are legal.
///
/// column_map pairs are (csv column name, document field), in file order; the
/// recognized field names are "id", "text", "label", "location", "keyword",
/// "date". label_decoder maps raw CSV label values (e.g. "-1") to label
/// strings; when empty, raw values are used as labels directly. An empty
/// `labels` list marks an unlabeled dataset (e.g. a competition test set).
struct LabelSchema {
    std::string name;
    std::vector<std::string> labels;
    std::vector<std::pair<std::string, std::string>> column_map;
    std::map<std::string, std::string> label_decoder;

    /// Index of `label` in `labels`, or -1.
    int label_index(std::string_view label) const;
    bool has_label(std::string_view label) const { return label_index(label) >= 0; }
    /// The csv column mapped to `field`, or empty.
    std::string column_for(std::string_view field) const;
};

struct LabeledDataset {
    LabelSchema schema;
    std::vector<Document> documents;

    std::size_t size() const { return documents.size(); }
    bool empty() const { return documents.empty(); }
};

struct SplitSpec {
    double holdout_fraction = 0.2;
    std::uint64_t seed = 42;
    bool stratified = true;
};

/// Relabels every document through `mapping` (old label -> new label).
/// The new schema's labels are the mapped images of the old schema's labels in
/// first-appearance order. Labels present in the data but missing from the
/// mapping are an error; unmapped labels absent from the data are dropped.
LabeledDataset map_labels(const LabeledDataset& dataset,
                          const std::map<std::string, std::string>& mapping);

/// Seeded stratified split into (train, holdout). Holdout gets round(f*N)
/// documents, per-class counts within 1 of f * class size (largest remainder).
/// Document order within each part follows the input order.
std::pair<LabeledDataset, LabeledDataset> stratified_split(const LabeledDataset& dataset,
                                                           const SplitSpec& spec);

/// Fraction of documents per label, in schema order. Every schema label is
/// present, absent classes as 0. Errors on an empty dataset.
std::vector<std::pair<std::string, double>> class_distribution(const LabeledDataset& dataset);

} // namespace tweetkit::corpus
