#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "rpm/text.hpp"

namespace rpm::testing {

inline std::string random_text(std::mt19937_64& rng, index_t n, int sigma) {
    std::uniform_int_distribution<int> letter(0, sigma - 1);
    std::string s(static_cast<std::size_t>(n), 'a');
    for (auto& c : s) c = static_cast<char>('a' + letter(rng));
    return s;
}

inline index_t uniform(std::mt19937_64& rng, index_t lo, index_t hi) {
    return std::uniform_int_distribution<index_t>(lo, hi)(rng);
}

inline std::vector<index_t> naive_occurrences(std::string_view s, std::string_view p) {
    std::vector<index_t> out;
    for (std::size_t i = 0; i + p.size() <= s.size(); ++i)
        if (s.compare(i, p.size(), p) == 0) out.push_back(static_cast<index_t>(i));
    return out;
}

inline index_t naive_lcp(std::string_view s, index_t i, index_t j) {
    index_t h = 0;
    while (i + h < static_cast<index_t>(s.size()) && j + h < static_cast<index_t>(s.size()) && s[i + h] == s[j + h])
        ++h;
    return h;
}

// Smallest period of s[i..j].
inline index_t naive_period(std::string_view s, index_t i, index_t j) {
    const index_t len = j - i + 1;
    for (index_t p = 1; p < len; ++p) {
        bool ok = true;
        for (index_t x = i; x + p <= j && ok; ++x) ok = s[x] == s[x + p];
        if (ok) return p;
    }
    return len;
}

// Longest prefix of each suffix occurring at least tau times, by naive scans.
inline std::vector<index_t> naive_frequent_prefix(std::string_view s, index_t tau) {
    const index_t n = static_cast<index_t>(s.size());
    std::vector<index_t> out(static_cast<std::size_t>(n), 0);
    for (index_t i = 0; i < n; ++i) {
        index_t len = 0;
        while (i + len < n && static_cast<index_t>(naive_occurrences(s, s.substr(i, len + 1)).size()) >= tau) ++len;
        out[i] = len;
    }
    return out;
}

}  // namespace rpm::testing
