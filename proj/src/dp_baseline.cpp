#include "rpm/dp_baseline.hpp"

#include <algorithm>
#include <stdexcept>

namespace rpm::dp {

std::vector<index_t> kmp_failure(std::string_view pattern) {
    const index_t m = static_cast<index_t>(pattern.size());
    std::vector<index_t> border(static_cast<std::size_t>(m), 0);
    index_t b = 0;
    for (index_t i = 1; i < m; ++i) {
        while (b > 0 && pattern[i] != pattern[b]) b = border[b - 1];
        if (pattern[i] == pattern[b]) ++b;
        border[i] = b;
    }
    return border;
}

std::vector<index_t> kmp_occurrences(std::string_view text, std::string_view pattern) {
    if (pattern.empty()) throw std::invalid_argument("kmp_occurrences: empty pattern");
    const auto border = kmp_failure(pattern);
    const index_t m = static_cast<index_t>(pattern.size());
    std::vector<index_t> out;
    index_t q = 0;
    for (index_t i = 0; i < static_cast<index_t>(text.size()); ++i) {
        while (q > 0 && text[i] != pattern[q]) q = border[q - 1];
        if (text[i] == pattern[q]) ++q;
        if (q == m) {
            out.push_back(i - m + 1);
            q = border[q - 1];
        }
    }
    return out;
}

std::int64_t max_stabbed(std::span<const index_t> starts, index_t length, index_t points, std::size_t w_cap) {
    const std::size_t f = starts.size();
    if (f == 0 || points <= 0) return 0;
    const std::size_t h_max = std::min<std::size_t>(static_cast<std::size_t>(points), f);

    // upto[b] = number of intervals starting at or before the right end of b.
    std::vector<std::int64_t> upto(f);
    for (std::size_t b = 0; b < f; ++b) {
        const index_t end = starts[b] + length - 1;
        upto[b] = std::upper_bound(starts.begin(), starts.end(), end) - starts.begin();
    }
    // Intervals c >= b containing end(b): cover[b]. Intervals containing end(b)
    // but not end(a), a < b: those c >= b with end(a) < start(c) <= end(b).
    auto gain = [&](std::size_t a, std::size_t b) -> std::int64_t {
        const auto bi = static_cast<std::int64_t>(b);
        return (upto[b] - bi) - std::max<std::int64_t>(0, upto[a] - bi);
    };

    std::vector<std::int64_t> w;
    const bool materialize = f <= w_cap;
    if (materialize) {
        w.assign(f * f, 0);
        for (std::size_t a = 0; a < f; ++a)
            for (std::size_t b = a + 1; b < f; ++b) w[a * f + b] = gain(a, b);
    }
    auto weight = [&](std::size_t a, std::size_t b) { return materialize ? w[a * f + b] : gain(a, b); };

    // table[h][b]: best with h + 1 points, the last at end(b) (row 0 column
    // fixed at its cover, allowing fewer points).
    std::vector<std::int64_t> prev(f);
    std::vector<std::int64_t> cur(f);
    for (std::size_t b = 0; b < f; ++b) prev[b] = upto[b] - static_cast<std::int64_t>(b);
    for (std::size_t h = 1; h < h_max; ++h) {
        cur[0] = prev[0];
        for (std::size_t b = 1; b < f; ++b) {
            std::int64_t best = 0;
            for (std::size_t a = 0; a < b; ++a) best = std::max(best, prev[a] + weight(a, b));
            cur[b] = best;
        }
        std::swap(prev, cur);
    }
    return *std::max_element(prev.begin(), prev.end());
}

bool dp_resilient(std::span<const index_t> occ, index_t length, index_t tau, index_t k) {
    const auto f = static_cast<std::int64_t>(occ.size());
    if (f < std::int64_t{tau} + k) return false;
    if (k == 0) return true;
    return f - max_stabbed(occ, length, k) >= tau;
}

namespace {

index_t longest_at(std::string_view s, index_t i, index_t tau, index_t k) {
    const index_t n = static_cast<index_t>(s.size());
    index_t lo = 0;
    index_t hi = n - i;
    while (lo < hi) {
        const index_t mid = lo + (hi - lo + 1) / 2;
        const auto pattern = s.substr(static_cast<std::size_t>(i), static_cast<std::size_t>(mid));
        const auto occ = kmp_occurrences(s, pattern);
        if (dp_resilient(occ, mid, tau, k))
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

}  // namespace

OutputArray solve_dp(const Text& text, index_t tau, index_t k) {
    validate_parameters(tau, k);
    const index_t n = text.size();
    OutputArray out(static_cast<std::size_t>(n), 0);
    for (index_t i = 0; i < n; ++i) out[i] = longest_at(text.view(), i, tau, k);
    return out;
}

OutputArray solve_dp_parallel(const Text& text, index_t tau, index_t k) {
    validate_parameters(tau, k);
    const index_t n = text.size();
    OutputArray out(static_cast<std::size_t>(n), 0);
    const auto view = text.view();
#pragma omp parallel for schedule(dynamic, 4)
    for (index_t i = 0; i < n; ++i) out[i] = longest_at(view, i, tau, k);
    return out;
}

}  // namespace rpm::dp
