// Copyright the tweetkit authors. Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.

#include "tweetkit/corpus/dataset.hpp"

#include "tweetkit/error.hpp"
#include "tweetkit/rng.hpp"

#include <algorithm>
#include <cmath>

namespace tweetkit::corpus {

int LabelSchema::label_index(std::string_view label) const {
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] == label) return static_cast<int>(i);
    }
    return -1;
}

std::string LabelSchema::column_for(std::string_view field) const {
    for (const auto& [column, f] : column_map) {
        if (f == field) return column;
    }
    return {};
}

LabeledDataset map_labels(const LabeledDataset& dataset,
                          const std::map<std::string, std::string>& mapping) {
    for (const Document& doc : dataset.documents) {
        if (mapping.find(doc.label) == mapping.end()) {
            throw DataError("map_labels: label \"" + doc.label + "\" has no mapping");
        }
    }

    LabeledDataset out;
    out.schema = dataset.schema;
    out.schema.labels.clear();
    out.schema.label_decoder.clear(); // raw codes no longer correspond to the new labels
    for (const std::string& old : dataset.schema.labels) {
        auto it = mapping.find(old);
        if (it == mapping.end()) continue; // unmapped and unused
        if (std::find(out.schema.labels.begin(), out.schema.labels.end(), it->second) ==
            out.schema.labels.end()) {
            out.schema.labels.push_back(it->second);
        }
    }

    out.documents = dataset.documents;
    for (Document& doc : out.documents) doc.label = mapping.at(doc.label);
    return out;
}

std::pair<LabeledDataset, LabeledDataset> stratified_split(const LabeledDataset& dataset,
                                                           const SplitSpec& spec) {
    if (!(spec.holdout_fraction > 0.0 && spec.holdout_fraction < 1.0)) {
        throw UsageError("stratified_split: holdout fraction must be in (0,1)");
    }

    const std::size_t n = dataset.size();
    const auto n_holdout =
        static_cast<std::size_t>(std::llround(spec.holdout_fraction * static_cast<double>(n)));

    std::mt19937_64 rng(spec.seed);

    if (!spec.stratified) {
        std::vector<std::size_t> order(n);
        for (std::size_t i = 0; i < n; ++i) order[i] = i;
        deterministic_shuffle(order, rng);
        std::vector<bool> held(n, false);
        for (std::size_t k = 0; k < n_holdout; ++k) held[order[k]] = true;
        LabeledDataset train, holdout;
        train.schema = dataset.schema;
        holdout.schema = dataset.schema;
        for (std::size_t i = 0; i < n; ++i) {
            (held[i] ? holdout : train).documents.push_back(dataset.documents[i]);
        }
        return {std::move(train), std::move(holdout)};
    }

    // Group document indices by class, in schema order.
    std::vector<std::vector<std::size_t>> by_class(dataset.schema.labels.size());
    for (std::size_t i = 0; i < n; ++i) {
        const int c = dataset.schema.label_index(dataset.documents[i].label);
        if (c < 0) throw DataError("stratified_split: label not in schema: " +
                                   dataset.documents[i].label);
        by_class[static_cast<std::size_t>(c)].push_back(i);
    }
    for (std::size_t c = 0; c < by_class.size(); ++c) {
        if (!by_class[c].empty() && by_class[c].size() < 2) {
            throw DataError("stratified_split: class \"" + dataset.schema.labels[c] +
                            "\" has fewer than 2 documents");
        }
    }

    // Per-class quota by largest remainder, so each count is floor or floor+1
    // of fraction * class size and the total is exactly round(fraction * N).
    std::vector<std::size_t> quota(by_class.size(), 0);
    std::vector<std::pair<double, std::size_t>> remainders;
    std::size_t assigned = 0;
    for (std::size_t c = 0; c < by_class.size(); ++c) {
        const double exact = spec.holdout_fraction * static_cast<double>(by_class[c].size());
        quota[c] = static_cast<std::size_t>(std::floor(exact));
        assigned += quota[c];
        remainders.emplace_back(exact - std::floor(exact), c);
    }
    std::stable_sort(remainders.begin(), remainders.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });
    for (std::size_t r = 0; assigned < n_holdout; ++r) {
        quota[remainders[r % remainders.size()].second] += 1;
        ++assigned;
    }

    std::vector<bool> in_holdout(n, false);
    for (std::size_t c = 0; c < by_class.size(); ++c) {
        std::vector<std::size_t> order = by_class[c];
        deterministic_shuffle(order, rng);
        for (std::size_t k = 0; k < quota[c] && k < order.size(); ++k) {
            in_holdout[order[k]] = true;
        }
    }

    LabeledDataset train, holdout;
    train.schema = dataset.schema;
    holdout.schema = dataset.schema;
    for (std::size_t i = 0; i < n; ++i) {
        (in_holdout[i] ? holdout : train).documents.push_back(dataset.documents[i]);
    }
    return {std::move(train), std::move(holdout)};
}

std::vector<std::pair<std::string, double>> class_distribution(const LabeledDataset& dataset) {
    if (dataset.empty()) throw DataError("class_distribution: dataset is empty");

    std::vector<std::size_t> counts(dataset.schema.labels.size(), 0);
    for (const Document& doc : dataset.documents) {
        const int c = dataset.schema.label_index(doc.label);
        if (c < 0) throw DataError("class_distribution: label not in schema: " + doc.label);
        counts[static_cast<std::size_t>(c)] += 1;
    }

    std::vector<std::pair<std::string, double>> out;
    out.reserve(counts.size());
    for (std::size_t c = 0; c < counts.size(); ++c) {
        out.emplace_back(dataset.schema.labels[c],
                         static_cast<double>(counts[c]) / static_cast<double>(dataset.size()));
    }
    return out;
}

} // namespace tweetkit::corpus
