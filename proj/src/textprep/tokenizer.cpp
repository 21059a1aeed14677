// Copyright the tweetkit authors. Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.

#include "tweetkit/textprep/tokenizer.hpp"

#include <algorithm>
#include <cctype>

namespace tweetkit::textprep {

namespace {

struct Codepoint {
    unsigned cp;
    std::size_t len;
};

// Lenient decoder: an invalid lead or truncated sequence yields the raw byte
// as a single codepoint so the scanner can keep going.
Codepoint decode(std::string_view s, std::size_t i) {
    const auto b = static_cast<unsigned char>(s[i]);
    if (b < 0x80) return {b, 1};
    std::size_t len;
    if ((b & 0xE0) == 0xC0) len = 2;
    else if ((b & 0xF0) == 0xE0) len = 3;
    else if ((b & 0xF8) == 0xF0) len = 4;
    else return {b, 1};
    if (i + len > s.size()) return {b, 1};
    unsigned cp = b & (0xFFu >> (len + 1));
    for (std::size_t k = 1; k < len; ++k) {
        const auto c = static_cast<unsigned char>(s[i + k]);
        if ((c & 0xC0) != 0x80) return {b, 1};
        cp = (cp << 6) | (c & 0x3Fu);
    }
    return {cp, len};
}

bool ascii_alnum(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0;
}

bool ascii_letter(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) != 0;
}

bool ascii_digit(char c) {
    return c >= '0' && c <= '9';
}

bool unicode_space(unsigned cp) {
    return (cp >= 0x2000 && cp <= 0x200A) || cp == 0x2028 || cp == 0x2029 || cp == 0x202F ||
           cp == 0x205F || cp == 0x3000 || cp == 0x00A0 || cp == 0x1680;
}

bool is_space_at(std::string_view s, std::size_t i, std::size_t* len) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c)) != 0) {
        *len = 1;
        return true;
    }
    const Codepoint u = decode(s, i);
    if (u.len > 1 && unicode_space(u.cp)) {
        *len = u.len;
        return true;
    }
    return false;
}

// "Letterish" codepoints join words: ASCII letters plus the alphabetic ranges
// below U+2000 (accented Latin, Greek, Cyrillic, ...). Everything at U+2000
// and above is treated as a symbol and tokenized on its own.
bool letterish(unsigned cp) {
    if (cp < 0x80) return ascii_letter(static_cast<char>(cp));
    return cp < 0x2000;
}

bool word_joiner(unsigned cp) {
    return cp == '\'' || cp == '-' || cp == '_' || cp == 0x2019; // incl. curly apostrophe
}

std::size_t match_url(std::string_view s, std::size_t i) {
    auto prefix = [&](std::string_view p) {
        if (i + p.size() > s.size()) return false;
        for (std::size_t k = 0; k < p.size(); ++k) {
            if (std::tolower(static_cast<unsigned char>(s[i + k])) != p[k]) return false;
        }
        return true;
    };
    std::size_t body = 0;
    if (prefix("https://")) body = 8;
    else if (prefix("http://")) body = 7;
    else if (prefix("www.")) body = 4;
    else return 0;
    std::size_t end = i + body;
    std::size_t sp = 0;
    while (end < s.size() && !is_space_at(s, end, &sp)) ++end;
    if (end == i + body) return 0;
    return end - i;
}

std::size_t match_emoticon(std::string_view s, std::size_t i) {
    for (const std::string& e : emoticon_table()) {
        if (s.compare(i, e.size(), e) != 0) continue;
        // Letter- or digit-edged emoticons need a boundary on that side.
        if (ascii_alnum(e.front()) && i > 0 && ascii_alnum(s[i - 1])) continue;
        if (ascii_alnum(e.back()) && i + e.size() < s.size() && ascii_alnum(s[i + e.size()])) {
            continue;
        }
        return e.size();
    }
    return 0;
}

std::size_t match_tag(std::string_view s, std::size_t i) {
    // #hashtag or @mention
    std::size_t end = i + 1;
    while (end < s.size() && (ascii_alnum(s[end]) || s[end] == '_')) ++end;
    return end == i + 1 ? 0 : end - i;
}

std::size_t match_number(std::string_view s, std::size_t i) {
    std::size_t end = i;
    while (end < s.size() && ascii_digit(s[end])) ++end;
    while (end + 3 < s.size() && s[end] == ',' && ascii_digit(s[end + 1]) &&
           ascii_digit(s[end + 2]) && ascii_digit(s[end + 3]) &&
           (end + 4 >= s.size() || !ascii_digit(s[end + 4]))) {
        end += 4;
    }
    if (end < s.size() && s[end] == '.' && end + 1 < s.size() && ascii_digit(s[end + 1])) {
        ++end;
        while (end < s.size() && ascii_digit(s[end])) ++end;
    }
    return end - i;
}

std::size_t match_word(std::string_view s, std::size_t i) {
    std::size_t end = i;
    while (end < s.size()) {
        const Codepoint u = decode(s, end);
        if (letterish(u.cp) || (end > i && u.cp < 0x80 && ascii_digit(static_cast<char>(u.cp)))) {
            end += u.len;
            continue;
        }
        if (end > i && word_joiner(u.cp)) {
            // joiner only counts when a word character follows it
            const std::size_t next = end + u.len;
            if (next < s.size()) {
                const Codepoint w = decode(s, next);
                if (letterish(w.cp) || (w.cp < 0x80 && ascii_digit(static_cast<char>(w.cp)))) {
                    end = next;
                    continue;
                }
            }
        }
        break;
    }
    return end - i;
}

} // namespace

const std::vector<std::string>& emoticon_table() {
    static const std::vector<std::string> table = [] {
        std::vector<std::string> t = {
            ":)",  ":-)",  ":))", ":-))", ":(",  ":-(",  ":((", ":'(",  ":'-(", ":')",
            ":'-)", ":D",  ":-D", ":P",   ":-P", ":p",   ":-p", ":o",   ":-o",  ":O",
            ":-O", ":/",   ":-/", ":\\",  ":-\\", ":|",  ":-|", ":*",   ":-*",  ":3",
            ":]",  ":[",   ":c",  ":C",   ":x",  ":X",   ":s",  ":S",   ":$",   ";)",
            ";-)", ";D",   ";-D", ";p",   ";P",  "=)",   "=(",  "=D",   "=P",   "=p",
            "=/",  "=|",   "=]",  "=[",   "xD",  "XD",   "<3",  "</3",  "^_^",  "^-^",
            "-_-", "o_O",  "O_o", "o_o",  "O_O", "T_T",  "T.T", "@_@",  "\\o/", ">:(",
            ">:)", ">:D",  "D:",  "D=",   "c:",  "8)",   "8-)", "B)",   "B-)",
        };
        std::stable_sort(t.begin(), t.end(), [](const std::string& a, const std::string& b) {
            return a.size() > b.size();
        });
        return t;
    }();
    return table;
}

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    std::size_t i = 0;
    const std::size_t n = text.size();

    while (i < n) {
        std::size_t sp = 0;
        if (is_space_at(text, i, &sp)) {
            i += sp;
            continue;
        }

        if (std::size_t len = match_url(text, i); len > 0) {
            out.emplace_back(text.substr(i, len));
            i += len;
            continue;
        }
        if (std::size_t len = match_emoticon(text, i); len > 0) {
            out.emplace_back(text.substr(i, len));
            i += len;
            continue;
        }
        const char c = text[i];
        if ((c == '#' || c == '@')) {
            if (std::size_t len = match_tag(text, i); len > 0) {
                out.emplace_back(text.substr(i, len));
                i += len;
                continue;
            }
        }
        if (ascii_digit(c)) {
            const std::size_t len = match_number(text, i);
            out.emplace_back(text.substr(i, len));
            i += len;
            continue;
        }

        const Codepoint u = decode(text, i);
        if (letterish(u.cp)) {
            const std::size_t len = match_word(text, i);
            out.emplace_back(text.substr(i, len));
            i += len;
            continue;
        }
        if (u.cp >= 0x2000) {
            // symbol / emoji run, kept as one token (covers ZWJ sequences)
            std::size_t end = i;
            while (end < n) {
                std::size_t sp2 = 0;
                if (is_space_at(text, end, &sp2)) break;
                const Codepoint v = decode(text, end);
                if (v.cp < 0x2000) break;
                end += v.len;
            }
            out.emplace_back(text.substr(i, end - i));
            i = end;
            continue;
        }

        // run of the same punctuation character ("...", "!!")
        std::size_t end = i + 1;
        while (end < n && text[end] == c) ++end;
        out.emplace_back(text.substr(i, end - i));
        i = end;
    }
    return out;
}

} // namespace tweetkit::textprep
