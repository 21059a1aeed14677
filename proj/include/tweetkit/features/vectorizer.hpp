// Copyright the tweetkit authors. Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.

#pragma once

#include "tweetkit/textprep/tokenizer.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace tweetkit::features {

struct NgramRange {
    int lo = 1;
    int hi = 1;

    bool operator==(const NgramRange&) const = default;
};

/// All contiguous n-token windows for each n in [range.lo, range.hi], in scan
/// order, n-grams joined with a single space.
std::vector<std::string> extract_ngrams(const std::vector<textprep::Token>& tokens,
                                        const NgramRange& range);

/// Term -> column map with corpus statistics. Column order is first-appearance
/// order over the training scan; indices are gapless; every retained term has
/// corpus_count >= min_count.
class Vocabulary {
public:
    Vocabulary() = default;
    Vocabulary(std::vector<std::string> terms, std::vector<std::uint64_t> corpus_count,
               std::vector<std::uint64_t> doc_count, NgramRange ngram, std::uint64_t min_count);

    std::size_t size() const { return terms_.size(); }
    const std::string& term(std::size_t j) const { return terms_[j]; }
    const std::vector<std::string>& terms() const { return terms_; }
    std::optional<std::uint32_t> find(const std::string& term) const;
    std::uint64_t corpus_count(std::size_t j) const { return corpus_count_[j]; }
    std::uint64_t doc_count(std::size_t j) const { return doc_count_[j]; }
    const NgramRange& ngram_range() const { return ngram_; }
    std::uint64_t min_count() const { return min_count_; }

private:
    std::vector<std::string> terms_;
    std::unordered_map<std::string, std::uint32_t> index_;
    std::vector<std::uint64_t> corpus_count_;
    std::vector<std::uint64_t> doc_count_;
    NgramRange ngram_;
    std::uint64_t min_count_ = 0;
};

/// Counts n-grams over the tokenized corpus and keeps terms whose total
/// occurrence count reaches min_count. Errors on an empty corpus or an empty
/// vocabulary after thresholding.
Vocabulary build_vocabulary(const std::vector<std::vector<textprep::Token>>& docs,
                            const NgramRange& range, std::uint64_t min_count);

/// Sparse non-negative feature vector; entries sorted by column, no zeros.
struct FeatureVector {
    std::vector<std::pair<std::uint32_t, double>> entries;

    double l2_norm_squared() const;
    double sum() const;
};

struct FeatureMatrix {
    std::vector<FeatureVector> rows;
    std::size_t n_cols = 0;
};

/// Bag-of-words counts for one document against a frozen vocabulary;
/// out-of-vocabulary n-grams contribute nothing.
FeatureVector vectorize_counts(const std::vector<textprep::Token>& tokens,
                               const Vocabulary& vocab);

} // namespace tweetkit::features
