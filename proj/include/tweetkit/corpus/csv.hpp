// Copyright the tweetkit authors. Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.

#pragma once

#include "tweetkit/corpus/dataset.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace tweetkit::corpus {

/// What happened while loading one CSV file. Record numbers are 1-based and
/// count the header, so the first data row is record 2.
struct LoadReport {
    std::string path;
    std::string encoding;   // "utf-8" or "latin-1"
    std::size_t rows_seen = 0;
    std::size_t rows_loaded = 0;
    std::vector<std::pair<std::size_t, std::string>> rejected; // (record, reason)

    std::string to_text() const;
};

/// RFC 4180 CSV reader: quoted fields may contain commas, escaped quotes ("")
/// and embedded newlines. The file is decoded as UTF-8; if any byte sequence
/// is invalid the whole file is reinterpreted as Latin-1 (never per row).
/// Rows with undecodable labels, blank text, duplicate ids or the wrong field
/// count are rejected and listed in the report; structural problems (missing
/// file, missing column, unbalanced quote, zero valid rows) throw DataError.
LabeledDataset load_csv(const std::filesystem::path& path, const LabelSchema& schema,
                        LoadReport* report = nullptr);

/// Writes the dataset back out under its schema. Labels are encoded through
/// the inverse of the schema's decoder. load_csv(save_csv(d)) == d.
void save_csv(const LabeledDataset& dataset, const std::filesystem::path& path);

/// Low-level record parser used by load_csv; exposed for reuse and tests.
/// Throws DataError on an unterminated quoted field.
std::vector<std::vector<std::string>> parse_csv(std::string_view text);

} // namespace tweetkit::corpus
