// Copyright the tweetkit authors. Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.

#pragma once

#include <string>
#include <string_view>

namespace tweetkit::textprep {

/// Placeholder rewriting rules. Application order is fixed: url, email, phone,
/// money, number; flags only switch individual rules off.
struct NormalizerRules {
    bool url = true;    // http://..., https://..., www....      -> "httpaddr"
    bool email = true;  // local@domain.tld                      -> "emailaddr"
    bool phone = true;  // 7+ digits with -.() separators         -> "phonenumbr"
    bool money = true;  // $, £, €  (symbol only)                 -> "moneysymb"
    bool number = true; // digit runs, comma groups, decimals     -> "numbr"

    static NormalizerRules all() { return {}; }
    static NormalizerRules none() { return {false, false, false, false, false}; }
    static NormalizerRules only_url() { return {true, false, false, false, false}; }
};

/// Replaces each matched span with its placeholder. A single space is inserted
/// before the placeholder unless one is already there, and after it when the
/// following character is not whitespace; all unmatched text is byte-identical.
/// Placeholders never re-match, so the function is idempotent.
std::string normalize(std::string_view text, const NormalizerRules& rules = {});

} // namespace tweetkit::textprep
