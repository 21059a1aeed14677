// Copyright the tweetkit authors. Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.

#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace tweetkit {

// Splits, folds and fuzz tests must reproduce bit-identically across standard
// libraries, so bounded draws and shuffles are spelled out here instead of
// relying on std::uniform_int_distribution / std::shuffle (both of which are
// implementation-defined).

inline std::uint64_t uniform_index(std::mt19937_64& rng, std::uint64_t n) {
    // Unbiased bounded draw by rejection.
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % n;
}

template <typename T>
void deterministic_shuffle(std::vector<T>& v, std::mt19937_64& rng) {
    if (v.size() < 2) return;
    for (std::size_t i = v.size() - 1; i > 0; --i) {
        const std::size_t j = static_cast<std::size_t>(uniform_index(rng, i + 1));
        std::swap(v[i], v[j]);
    }
}

} // namespace tweetkit
