// Copyright the tweetkit authors. Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.

#include "tweetkit/features/vectorizer.hpp"

#include "tweetkit/error.hpp"

#include <algorithm>
#include <map>

namespace tweetkit::features {

namespace {

void check_range(const NgramRange& range) {
    if (!(1 <= range.lo && range.lo <= range.hi && range.hi <= 3)) {
        throw UsageError("ngram range must satisfy 1 <= lo <= hi <= 3");
    }
}

} // namespace

std::vector<std::string> extract_ngrams(const std::vector<textprep::Token>& tokens,
                                        const NgramRange& range) {
    check_range(range);
    std::vector<std::string> out;
    const std::size_t n = tokens.size();
    for (int len = range.lo; len <= range.hi; ++len) {
        const auto l = static_cast<std::size_t>(len);
        if (l > n) break;
        for (std::size_t i = 0; i + l <= n; ++i) {
            std::string gram = tokens[i];
            for (std::size_t k = 1; k < l; ++k) {
                gram.push_back(' ');
                gram += tokens[i + k];
            }
            out.push_back(std::move(gram));
        }
    }
    return out;
}

Vocabulary::Vocabulary(std::vector<std::string> terms, std::vector<std::uint64_t> corpus_count,
                       std::vector<std::uint64_t> doc_count, NgramRange ngram,
                       std::uint64_t min_count)
    : terms_(std::move(terms)),
      corpus_count_(std::move(corpus_count)),
      doc_count_(std::move(doc_count)),
      ngram_(ngram),
      min_count_(min_count) {
    if (corpus_count_.size() != terms_.size() || doc_count_.size() != terms_.size()) {
        throw UsageError("vocabulary: count arrays must match term count");
    }
    index_.reserve(terms_.size());
    for (std::size_t j = 0; j < terms_.size(); ++j) {
        if (!index_.emplace(terms_[j], static_cast<std::uint32_t>(j)).second) {
            throw UsageError("vocabulary: duplicate term \"" + terms_[j] + "\"");
        }
    }
}

std::optional<std::uint32_t> Vocabulary::find(const std::string& term) const {
    auto it = index_.find(term);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

Vocabulary build_vocabulary(const std::vector<std::vector<textprep::Token>>& docs,
                            const NgramRange& range, std::uint64_t min_count) {
    check_range(range);
    if (docs.empty()) throw DataError("build_vocabulary: empty corpus");

    // First-appearance order, total occurrence counts, document frequencies.
    std::vector<std::string> order;
    std::unordered_map<std::string, std::size_t> pos;
    std::vector<std::uint64_t> corpus_count;
    std::vector<std::uint64_t> doc_count;
    std::vector<std::size_t> last_doc; // last document index that touched the term

    for (std::size_t d = 0; d < docs.size(); ++d) {
        for (std::string& gram : extract_ngrams(docs[d], range)) {
            auto [it, inserted] = pos.emplace(std::move(gram), order.size());
            if (inserted) {
                order.push_back(it->first);
                corpus_count.push_back(0);
                doc_count.push_back(0);
                last_doc.push_back(SIZE_MAX);
            }
            const std::size_t j = it->second;
            corpus_count[j] += 1;
            if (last_doc[j] != d) {
                last_doc[j] = d;
                doc_count[j] += 1;
            }
        }
    }

    std::vector<std::string> terms;
    std::vector<std::uint64_t> kept_corpus, kept_doc;
    for (std::size_t j = 0; j < order.size(); ++j) {
        if (corpus_count[j] >= min_count) {
            terms.push_back(order[j]);
            kept_corpus.push_back(corpus_count[j]);
            kept_doc.push_back(doc_count[j]);
        }
    }
    if (terms.empty()) {
        throw DataError("build_vocabulary: no term reaches min_count " +
                        std::to_string(min_count));
    }
    return Vocabulary(std::move(terms), std::move(kept_corpus), std::move(kept_doc), range,
                      min_count);
}

double FeatureVector::l2_norm_squared() const {
    double acc = 0.0;
    for (const auto& [j, w] : entries) acc += w * w;
    return acc;
}

double FeatureVector::sum() const {
    double acc = 0.0;
    for (const auto& [j, w] : entries) acc += w;
    return acc;
}

FeatureVector vectorize_counts(const std::vector<textprep::Token>& tokens,
                               const Vocabulary& vocab) {
    std::map<std::uint32_t, double> counts; // ordered: entries come out sorted
    for (const std::string& gram : extract_ngrams(tokens, vocab.ngram_range())) {
        if (auto j = vocab.find(gram)) counts[*j] += 1.0;
    }
    FeatureVector out;
    out.entries.assign(counts.begin(), counts.end());
    return out;
}

} // namespace tweetkit::features
