// Copyright the tweetkit authors. Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.

#pragma once

#include "tweetkit/textprep/tokenizer.hpp"

#include <string>
#include <unordered_set>
#include <vector>

namespace tweetkit::textprep {

/// The embedded English stopword list. Fixed and versioned: treat any edit as
/// a new version, since it changes every trained vocabulary.
const std::vector<std::string>& default_stopwords();
const char* stopword_list_version();

std::unordered_set<std::string> default_stopword_set();

/// Drops tokens whose lower-cased surface is in `stopwords`; order preserved.
std::vector<Token> remove_stopwords(const std::vector<Token>& tokens,
                                    const std::unordered_set<std::string>& stopwords);

} // namespace tweetkit::textprep
