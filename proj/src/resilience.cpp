#include "rpm/resilience.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

namespace rpm {

std::int64_t greedy_destroyable(std::span<const index_t> occ, std::int64_t tokens, index_t length) {
    std::int64_t pairs = 0;
    std::size_t i = 0;
    while (i < occ.size() && pairs < tokens) {
        if (i + 1 < occ.size() && occ[i + 1] - occ[i] <= length - 1) {
            ++pairs;
            ++i;
        }
        ++i;
    }
    const std::int64_t singles = tokens - pairs;
    return singles + 2 * pairs;
}

bool aperiodic_resilient(index_t frequency, index_t length, index_t tau, index_t k,
                         const OccurrenceProvider& occurrences) {
    assert(static_cast<std::int64_t>(frequency) >= std::int64_t{tau} + k);
    if (static_cast<std::int64_t>(frequency) >= std::int64_t{tau} + 2 * std::int64_t{k}) return true;
    const auto occ = occurrences();
    assert(static_cast<index_t>(occ.size()) == frequency);
    return frequency - greedy_destroyable(occ, k, length) >= tau;
}

ClusterSet create_clusters(std::span<const index_t> occ, index_t length, index_t period, index_t tau,
                           index_t k, const EnhancedIndex& idx) {
    const std::int64_t cap = std::int64_t{tau} + 2 * std::int64_t{k};
    ClusterSet out;
    std::size_t next = 0;
    while (next < occ.size()) {
        if (static_cast<std::int64_t>(out.clusters.size()) >= cap) {
            out.saturated = true;
            out.clusters.clear();
            return out;
        }
        const index_t f = occ[next];
        // S[f .. f + period + lce) has period `period`; occurrences of P start
        // every `period` positions as long as P still fits.
        const index_t lce = idx.lce(f, f + period);
        const index_t count = (lce - (length - period)) / period + 1;
        assert(count >= 1 && next + static_cast<std::size_t>(count) <= occ.size());
        assert(occ[next + static_cast<std::size_t>(count) - 1] == f + (count - 1) * period);
        out.clusters.push_back({f, count});
        next += static_cast<std::size_t>(count);
    }
    if (static_cast<std::int64_t>(out.clusters.size()) >= cap) {
        out.saturated = true;
        out.clusters.clear();
    }
    return out;
}

PeriodicCheckState periodic_first_stage(index_t frequency, index_t length, index_t period, index_t tau,
                                        index_t k, std::span<const Cluster> clusters) {
    PeriodicCheckState st;
    st.alpha = (length + period - 1) / period;
    st.tokens = k;
    for (const Cluster& c : clusters) {
        if (!(frequency - st.destroyed >= tau && st.tokens > 0)) break;
        const std::int64_t y = std::min<std::int64_t>(st.tokens, c.count / st.alpha);
        st.destroyed += y * st.alpha;
        st.tokens -= y;
        const std::int64_t residue = c.count % st.alpha;
        if (residue >= 3)
            ++st.remainders[residue];
        else if (residue == 1 || residue == 2)
            st.small_residue.push_back(c);
    }
    assert(st.tokens >= 0 && st.destroyed <= frequency);
    return st;
}

bool periodic_resilient(index_t frequency, index_t length, index_t period, index_t tau, index_t k,
                        const ClusterSet& clusters) {
    if (clusters.saturated) return true;
    PeriodicCheckState st = periodic_first_stage(frequency, length, period, tau, k, clusters.clusters);
    const std::int64_t occ = frequency;
    auto alive = [&] { return occ - st.destroyed >= tau && st.tokens > 0; };

    // Largest residues first; each token takes one residue batch.
    while (!st.remainders.empty() && alive()) {
        auto top = st.remainders.begin();
        const std::int64_t y = std::min(st.tokens, top->second);
        st.destroyed += y * top->first;
        st.tokens -= y;
        st.remainders.erase(top);
    }

    // Residues of one or two: pair up overlapping survivors across clusters.
    if (alive()) {
        std::int64_t z = std::numeric_limits<std::int64_t>::min() / 2;  // rightmost surviving occurrence
        for (const Cluster& c : st.small_residue) {
            const std::int64_t last = c.first + std::int64_t{c.count - 1} * period;
            const bool two = c.count % st.alpha == 2;
            if (c.first - z < length) {
                ++st.pairs;
                if (two) z = last;
            } else if (two) {
                ++st.pairs;
            } else {
                z = last;
            }
        }
    }
    assert(st.tokens >= 0 && st.destroyed <= occ);
    const std::int64_t left = occ - st.destroyed;
    return left - std::min(st.pairs, st.tokens) - std::min(left, st.tokens) >= tau;
}

}  // namespace rpm
