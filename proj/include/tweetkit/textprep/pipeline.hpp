// Copyright the tweetkit authors. Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.

#pragma once

#include "tweetkit/textprep/normalizer.hpp"
#include "tweetkit/textprep/stopwords.hpp"
#include "tweetkit/textprep/tokenizer.hpp"

#include <string_view>
#include <unordered_set>
#include <utility>

namespace tweetkit::textprep {

/// Switches for the five-stage preprocessing pipeline. Stage order is fixed:
/// normalize -> tokenize -> lowercase -> remove stopwords -> stem.
struct PrepConfig {
    bool normalize = true;
    bool lowercase = true;
    bool remove_stopwords = false;
    bool stem = true;
    NormalizerRules rules = {};
    /// Lowercase stopword inventory consulted when remove_stopwords is on.
    std::vector<std::string> stopword_list = default_stopwords();

    /// Tokenize-only (what the baseline runs see as "raw").
    static PrepConfig raw() {
        PrepConfig c;
        c.normalize = c.lowercase = c.remove_stopwords = c.stem = false;
        return c;
    }
};

std::vector<Token> preprocess(std::string_view text, const PrepConfig& config);

/// Precompiled form of PrepConfig for batch use (stopword set built once).
class Preprocessor {
public:
    explicit Preprocessor(PrepConfig config);
    std::vector<Token> operator()(std::string_view text) const;
    const PrepConfig& config() const { return config_; }

private:
    PrepConfig config_;
    std::unordered_set<std::string> stopwords_;
};

/// (stage name, stage output) after every enabled stage, for `prep --trace`.
std::vector<std::pair<std::string, std::string>> preprocess_trace(std::string_view text,
                                                                  const PrepConfig& config);

} // namespace tweetkit::textprep
