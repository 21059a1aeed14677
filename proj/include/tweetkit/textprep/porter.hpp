// Copyright the tweetkit authors. Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.

#pragma once

#include <string>
#include <string_view>

namespace tweetkit::textprep {

/// Porter stemmer (the 1980 suffix-stripping algorithm, matching the widely
/// distributed reference implementation, including its step-2 amendments
/// "bli"->"ble" and "logi"->"log" and its skip of one- and two-letter words).
///
/// Tokens made purely of ASCII letters are lower-cased and stemmed; every
/// other token (hashtags, numbers, emoticons, accented words) passes through
/// unchanged.
std::string stem_word(std::string_view token);

} // namespace tweetkit::textprep
