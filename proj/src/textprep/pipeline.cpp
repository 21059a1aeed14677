// Copyright the tweetkit authors. Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.

#include "tweetkit/textprep/pipeline.hpp"

#include "tweetkit/textprep/porter.hpp"

#include <cctype>
#include <sstream>

namespace tweetkit::textprep {

namespace {

void lowercase_ascii(std::string& s) {
    for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
}

std::string join(const std::vector<Token>& tokens) {
    std::string out;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (i > 0) out.push_back(' ');
        out += tokens[i];
    }
    return out;
}

} // namespace

Preprocessor::Preprocessor(PrepConfig config) : config_(std::move(config)) {
    if (config_.remove_stopwords) {
        stopwords_.insert(config_.stopword_list.begin(), config_.stopword_list.end());
    }
}

std::vector<Token> Preprocessor::operator()(std::string_view text) const {
    std::vector<Token> tokens;
    if (config_.normalize) {
        tokens = tokenize(normalize(text, config_.rules));
    } else {
        tokens = tokenize(text);
    }
    if (config_.lowercase) {
        for (Token& t : tokens) lowercase_ascii(t);
    }
    if (config_.remove_stopwords) {
        tokens = remove_stopwords(tokens, stopwords_);
    }
    if (config_.stem) {
        for (Token& t : tokens) t = stem_word(t);
    }
    return tokens;
}

std::vector<Token> preprocess(std::string_view text, const PrepConfig& config) {
    return Preprocessor(config)(text);
}

std::vector<std::pair<std::string, std::string>> preprocess_trace(std::string_view text,
                                                                  const PrepConfig& config) {
    std::vector<std::pair<std::string, std::string>> stages;
    stages.emplace_back("input", std::string(text));

    std::string cur(text);
    if (config.normalize) {
        cur = normalize(cur, config.rules);
        stages.emplace_back("normalize", cur);
    }
    std::vector<Token> tokens = tokenize(cur);
    stages.emplace_back("tokenize", join(tokens));
    if (config.lowercase) {
        for (Token& t : tokens) lowercase_ascii(t);
        stages.emplace_back("lowercase", join(tokens));
    }
    if (config.remove_stopwords) {
        std::unordered_set<std::string> set(config.stopword_list.begin(),
                                            config.stopword_list.end());
        tokens = remove_stopwords(tokens, set);
        stages.emplace_back("stopwords", join(tokens));
    }
    if (config.stem) {
        for (Token& t : tokens) t = stem_word(t);
        stages.emplace_back("stem", join(tokens));
    }
    return stages;
}

} // namespace tweetkit::textprep
