// Copyright the tweetkit authors. Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.

#include "tweetkit/textprep/porter.hpp"

#include <algorithm>
#include <cctype>

namespace tweetkit::textprep {

namespace {

// State follows the classic formulation: b holds the word, k is the offset of
// the last live character, j marks the end of the stem after ends() matched.
struct Stemmer {
    std::string b;
    int k = 0;
    int j = 0;

    bool cons(int i) const {
        switch (b[static_cast<std::size_t>(i)]) {
        case 'a': case 'e': case 'i': case 'o': case 'u':
            return false;
        case 'y':
            return i == 0 ? true : !cons(i - 1);
        default:
            return true;
        }
    }

    // Number of consonant-vowel sequences in b[0..j].
    int m() const {
        int n = 0;
        int i = 0;
        while (true) {
            if (i > j) return n;
            if (!cons(i)) break;
            ++i;
        }
        ++i;
        while (true) {
            while (true) {
                if (i > j) return n;
                if (cons(i)) break;
                ++i;
            }
            ++i;
            ++n;
            while (true) {
                if (i > j) return n;
                if (!cons(i)) break;
                ++i;
            }
            ++i;
        }
    }

    bool vowel_in_stem() const {
        for (int i = 0; i <= j; ++i) {
            if (!cons(i)) return true;
        }
        return false;
    }

    bool doublec(int i) const {
        if (i < 1) return false;
        if (b[static_cast<std::size_t>(i)] != b[static_cast<std::size_t>(i - 1)]) return false;
        return cons(i);
    }

    // consonant-vowel-consonant ending at i, last consonant not w, x or y.
    bool cvc(int i) const {
        if (i < 2 || !cons(i) || cons(i - 1) || !cons(i - 2)) return false;
        const char ch = b[static_cast<std::size_t>(i)];
        return ch != 'w' && ch != 'x' && ch != 'y';
    }

    bool ends(std::string_view s) {
        const int len = static_cast<int>(s.size());
        if (len > k + 1) return false;
        if (b.compare(static_cast<std::size_t>(k - len + 1), static_cast<std::size_t>(len),
                      s) != 0) {
            return false;
        }
        j = k - len;
        return true;
    }

    void set_to(std::string_view s) {
        b.replace(static_cast<std::size_t>(j + 1), b.size(), s);
        k = j + static_cast<int>(s.size());
    }

    void r(std::string_view s) {
        if (m() > 0) set_to(s);
    }

    // Plurals and -ed / -ing.
    void step1ab() {
        if (b[static_cast<std::size_t>(k)] == 's') {
            if (ends("sses")) k -= 2;
            else if (ends("ies")) set_to("i");
            else if (b[static_cast<std::size_t>(k - 1)] != 's') --k;
        }
        if (ends("eed")) {
            if (m() > 0) --k;
        } else if ((ends("ed") || ends("ing")) && vowel_in_stem()) {
            k = j;
            if (ends("at")) set_to("ate");
            else if (ends("bl")) set_to("ble");
            else if (ends("iz")) set_to("ize");
            else if (doublec(k)) {
                --k;
                const char ch = b[static_cast<std::size_t>(k)];
                if (ch == 'l' || ch == 's' || ch == 'z') ++k;
            } else if (m() == 1 && cvc(k)) {
                set_to("e");
            }
        }
    }

    // Terminal y -> i when there is another vowel in the stem.
    void step1c() {
        if (ends("y") && vowel_in_stem()) b[static_cast<std::size_t>(k)] = 'i';
    }

    // Double suffixes to single ones. Once a suffix matches the step is done,
    // whether or not the m() > 0 condition lets the rewrite fire.
    void step2() {
        if (k < 1) return; // no step-2 suffix fits anyway
        switch (b[static_cast<std::size_t>(k - 1)]) {
        case 'a':
            if (ends("ational")) { r("ate"); return; }
            if (ends("tional")) { r("tion"); return; }
            return;
        case 'c':
            if (ends("enci")) { r("ence"); return; }
            if (ends("anci")) { r("ance"); return; }
            return;
        case 'e':
            if (ends("izer")) { r("ize"); return; }
            return;
        case 'l':
            if (ends("bli")) { r("ble"); return; }
            if (ends("alli")) { r("al"); return; }
            if (ends("entli")) { r("ent"); return; }
            if (ends("eli")) { r("e"); return; }
            if (ends("ousli")) { r("ous"); return; }
            return;
        case 'o':
            if (ends("ization")) { r("ize"); return; }
            if (ends("ation")) { r("ate"); return; }
            if (ends("ator")) { r("ate"); return; }
            return;
        case 's':
            if (ends("alism")) { r("al"); return; }
            if (ends("iveness")) { r("ive"); return; }
            if (ends("fulness")) { r("ful"); return; }
            if (ends("ousness")) { r("ous"); return; }
            return;
        case 't':
            if (ends("aliti")) { r("al"); return; }
            if (ends("iviti")) { r("ive"); return; }
            if (ends("biliti")) { r("ble"); return; }
            return;
        case 'g':
            if (ends("logi")) { r("log"); return; }
            return;
        default:
            return;
        }
    }

    void step3() {
        switch (b[static_cast<std::size_t>(k)]) {
        case 'e':
            if (ends("icate")) { r("ic"); return; }
            if (ends("ative")) { r(""); return; }
            if (ends("alize")) { r("al"); return; }
            return;
        case 'i':
            if (ends("iciti")) { r("ic"); return; }
            return;
        case 'l':
            if (ends("ical")) { r("ic"); return; }
            if (ends("ful")) { r(""); return; }
            return;
        case 's':
            if (ends("ness")) { r(""); return; }
            return;
        default:
            return;
        }
    }

    // Strip -ant, -ence etc. in context m() > 1.
    void step4() {
        if (k < 1) return;
        switch (b[static_cast<std::size_t>(k - 1)]) {
        case 'a':
            if (ends("al")) break;
            return;
        case 'c':
            if (ends("ance")) break;
            if (ends("ence")) break;
            return;
        case 'e':
            if (ends("er")) break;
            return;
        case 'i':
            if (ends("ic")) break;
            return;
        case 'l':
            if (ends("able")) break;
            if (ends("ible")) break;
            return;
        case 'n':
            if (ends("ant")) break;
            if (ends("ement")) break;
            if (ends("ment")) break;
            if (ends("ent")) break;
            return;
        case 'o':
            if (ends("ion") && j >= 0 &&
                (b[static_cast<std::size_t>(j)] == 's' || b[static_cast<std::size_t>(j)] == 't')) {
                break;
            }
            if (ends("ou")) break;
            return;
        case 's':
            if (ends("ism")) break;
            return;
        case 't':
            if (ends("ate")) break;
            if (ends("iti")) break;
            return;
        case 'u':
            if (ends("ous")) break;
            return;
        case 'v':
            if (ends("ive")) break;
            return;
        case 'z':
            if (ends("ize")) break;
            return;
        default:
            return;
        }
        if (m() > 1) k = j;
    }

    // Remove final -e and reduce -ll in long words.
    void step5() {
        j = k;
        if (b[static_cast<std::size_t>(k)] == 'e') {
            const int a = m();
            if (a > 1 || (a == 1 && !cvc(k - 1))) --k;
        }
        if (b[static_cast<std::size_t>(k)] == 'l' && doublec(k) && m() > 1) --k;
    }

    std::string run() {
        if (b.size() <= 2) return b; // short words are left alone
        k = static_cast<int>(b.size()) - 1;
        step1ab();
        step1c();
        step2();
        step3();
        step4();
        step5();
        b.resize(static_cast<std::size_t>(k + 1));
        return b;
    }
};

bool ascii_letters_only(std::string_view s) {
    if (s.empty()) return false;
    return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isalpha(c) != 0; });
}

} // namespace

std::string stem_word(std::string_view token) {
    if (!ascii_letters_only(token)) return std::string(token);
    Stemmer s;
    s.b.reserve(token.size());
    for (char c : token) {
        s.b.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    return s.run();
}

} // namespace tweetkit::textprep
