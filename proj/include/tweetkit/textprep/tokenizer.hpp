// Copyright the tweetkit authors. Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.

#pragma once

#include <string>
#include <vector>

namespace tweetkit::textprep {

/// A token is never empty and never contains whitespace.
using Token = std::string;

/// Tweet-aware tokenizer. Keeps emoticons from emoticon_table(), #hashtags,
/// @mentions, URLs and numbers like "13,000" whole; words may contain interior
/// apostrophes, hyphens and underscores; emoji and other symbol codepoints
/// form their own tokens; remaining punctuation is emitted as same-character
/// runs. Total on arbitrary byte strings, including invalid UTF-8.
std::vector<Token> tokenize(std::string_view text);

/// The shipped emoticon inventory, longest first.
const std::vector<std::string>& emoticon_table();

} // namespace tweetkit::textprep
