// Copyright the tweetkit authors. Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.

#include "tweetkit/textprep/normalizer.hpp"

#include <cctype>
#include <functional>

namespace tweetkit::textprep {

namespace {

bool ascii_space(char c) {
    return std::isspace(static_cast<unsigned char>(c)) != 0;
}

bool digit(char c) {
    return c >= '0' && c <= '9';
}

bool letter(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

bool local_part_char(char c) {
    return letter(c) || digit(c) || c == '.' || c == '_' || c == '%' || c == '+' || c == '-';
}

bool domain_char(char c) {
    return letter(c) || digit(c) || c == '.' || c == '-';
}

bool istarts_with(std::string_view s, std::size_t i, std::string_view prefix) {
    if (i + prefix.size() > s.size()) return false;
    for (std::size_t k = 0; k < prefix.size(); ++k) {
        if (std::tolower(static_cast<unsigned char>(s[i + k])) !=
            static_cast<int>(static_cast<unsigned char>(prefix[k]))) {
            return false;
        }
    }
    return true;
}

// Match length at position i, or 0.
using Matcher = std::size_t (*)(std::string_view, std::size_t);

std::size_t match_url(std::string_view s, std::size_t i) {
    std::size_t start = 0;
    if (istarts_with(s, i, "https://")) start = 8;
    else if (istarts_with(s, i, "http://")) start = 7;
    else if (istarts_with(s, i, "www.")) start = 4;
    else return 0;
    std::size_t end = i + start;
    while (end < s.size() && !ascii_space(s[end])) ++end;
    if (end == i + start) return 0; // bare scheme, leave it
    return end - i;
}

// A domain is valid when it has at least two dot-separated non-empty labels
// and its final label is two or more letters. Greedy consumption backs off to
// the longest valid prefix so trailing junk never hides an address.
std::size_t valid_domain_prefix(std::string_view domain) {
    for (std::size_t end = domain.size(); end > 0; --end) {
        if (!letter(domain[end - 1])) continue;
        const std::string_view cand = domain.substr(0, end);
        const std::size_t last_dot = cand.rfind('.');
        if (last_dot == std::string_view::npos || last_dot == 0) continue;
        const std::string_view tld = cand.substr(last_dot + 1);
        if (tld.size() < 2) continue;
        bool ok = true;
        for (char c : tld) {
            if (!letter(c)) { ok = false; break; }
        }
        if (!ok) continue;
        if (cand.find("..") != std::string_view::npos) continue;
        return end;
    }
    return 0;
}

std::size_t match_email(std::string_view s, std::size_t i) {
    if (!local_part_char(s[i])) return 0;
    if (i > 0 && local_part_char(s[i - 1])) return 0; // must start the local part
    std::size_t at = i;
    while (at < s.size() && local_part_char(s[at])) ++at;
    if (at >= s.size() || s[at] != '@') return 0;
    std::size_t dom_end = at + 1;
    while (dom_end < s.size() && domain_char(s[dom_end])) ++dom_end;
    const std::size_t dom_len = valid_domain_prefix(s.substr(at + 1, dom_end - at - 1));
    if (dom_len == 0) return 0;
    return (at + 1 + dom_len) - i;
}

std::size_t match_phone(std::string_view s, std::size_t i) {
    const char c0 = s[i];
    if (!digit(c0) && c0 != '+' && c0 != '(') return 0;
    auto phone_char = [](char c) {
        return digit(c) || c == '+' || c == '-' || c == '.' || c == '(' || c == ')';
    };
    std::size_t end = i;
    while (end < s.size() && phone_char(s[end])) ++end;
    while (end > i && !digit(s[end - 1])) --end; // never swallow trailing separators
    std::size_t digits = 0;
    for (std::size_t p = i; p < end; ++p) {
        if (digit(s[p])) ++digits;
    }
    if (digits < 7) return 0;
    return end - i;
}

std::size_t match_money(std::string_view s, std::size_t i) {
    if (s[i] == '$') return 1;
    if (istarts_with(s, i, "\xc2\xa3")) return 2;     // £
    if (istarts_with(s, i, "\xe2\x82\xac")) return 3; // €
    return 0;
}

std::size_t match_number(std::string_view s, std::size_t i) {
    if (!digit(s[i])) return 0;
    std::size_t end = i;
    while (end < s.size() && digit(s[end])) ++end;
    // comma-separated thousands: groups of exactly three digits
    while (end + 3 < s.size() && s[end] == ',' && digit(s[end + 1]) && digit(s[end + 2]) &&
           digit(s[end + 3]) && (end + 4 >= s.size() || !digit(s[end + 4]))) {
        end += 4;
    }
    if (end < s.size() && s[end] == '.' && end + 1 < s.size() && digit(s[end + 1])) {
        ++end;
        while (end < s.size() && digit(s[end])) ++end;
    }
    return end - i;
}

std::string apply_rule(std::string_view s, Matcher match, std::string_view placeholder) {
    std::string out;
    out.reserve(s.size() + 16);
    std::size_t i = 0;
    while (i < s.size()) {
        const std::size_t len = match(s, i);
        if (len == 0) {
            out.push_back(s[i]);
            ++i;
            continue;
        }
        if (out.empty() || !ascii_space(out.back())) out.push_back(' ');
        out.append(placeholder);
        i += len;
        if (i < s.size() && !ascii_space(s[i])) out.push_back(' ');
    }
    return out;
}

} // namespace

std::string normalize(std::string_view text, const NormalizerRules& rules) {
    std::string cur(text);
    if (rules.url) cur = apply_rule(cur, &match_url, "httpaddr");
    if (rules.email) cur = apply_rule(cur, &match_email, "emailaddr");
    if (rules.phone) cur = apply_rule(cur, &match_phone, "phonenumbr");
    if (rules.money) cur = apply_rule(cur, &match_money, "moneysymb");
    if (rules.number) cur = apply_rule(cur, &match_number, "numbr");
    return cur;
}

} // namespace tweetkit::textprep
