#include "rpm/runs.hpp"

#include <algorithm>
#include <cassert>
#include <optional>

namespace rpm {

namespace {

// Most common extensions are short; compare a few letters before the RMQ.
constexpr index_t kDirectScan = 8;
// Left extensions also pay for building the reversed-text index, so they scan further.
constexpr index_t kBackwardScan = 64;

index_t forward_lce(const Text& text, const EnhancedIndex& idx, index_t a, index_t b) {
    const index_t n = text.size();
    const index_t limit = std::min(kDirectScan, n - std::max(a, b));
    index_t h = 0;
    while (h < limit && text[a + h] == text[b + h]) ++h;
    return h < limit || h == n - std::max(a, b) ? h : idx.lce(a, b);
}

// Longest Lyndon word starting at each position, for the byte order
// (inverted = false) or the reversed byte order. The end of the text compares
// smaller than every letter under both orders.
std::vector<index_t> lyndon_array(const Text& text, const EnhancedIndex& idx, bool inverted) {
    const index_t n = text.size();
    const auto isa = idx.isa();
    auto greater = [&](index_t a, index_t b) {  // suffix a > suffix b
        if (!inverted) return isa[a] > isa[b];
        const index_t h = forward_lce(text, idx, a, b);
        if (a + h == n) return false;
        if (b + h == n) return true;
        return text[a + h] < text[b + h];
    };
    std::vector<index_t> lam(static_cast<std::size_t>(n));
    for (index_t i = n - 1; i >= 0; --i) {
        index_t j = i + 1;
        while (j < n && greater(j, i)) j += lam[j];
        lam[i] = j - i;
    }
    return lam;
}

}  // namespace

std::vector<Run> compute_runs(const Text& text) {
    if (text.size() < 2) return {};
    EnhancedIndex forward(text);
    return compute_runs(text, forward);
}

std::vector<Run> compute_runs(const Text& text, const EnhancedIndex& forward) {
    const index_t n = text.size();
    if (n < 2) return {};

    // Common suffix length of S[0..a] and S[0..b]. Long ones are rare, so the
    // index of the reversed text is only built when a scan runs long.
    std::optional<EnhancedIndex> backward;
    auto lcs = [&](index_t a, index_t b) {
        const index_t limit = std::min(kBackwardScan, std::min(a, b) + 1);
        index_t h = 0;
        while (h < limit && text[a - h] == text[b - h]) ++h;
        if (h < limit || h == std::min(a, b) + 1) return h;
        if (!backward) backward.emplace(Text(std::vector<std::uint8_t>(text.bytes().rbegin(), text.bytes().rend())));
        return backward->lce(n - 1 - a, n - 1 - b);
    };

    std::vector<Run> runs;
    for (bool inverted : {false, true}) {
        const auto lam = lyndon_array(text, forward, inverted);
        for (index_t i = 0; i < n; ++i) {
            const index_t p = lam[i];
            const index_t j = i + p;
            if (j >= n) continue;
            // A root repeated just to the left starts the same run; the
            // leftmost copy reports it.
            if (i >= p && forward_lce(text, forward, i - p, i) >= p) continue;
            const index_t right = forward_lce(text, forward, i, j);
            const index_t left = (i > 0) ? lcs(i - 1, j - 1) : 0;
            const index_t start = i - left;
            const index_t end = j + right - 1;
            if (end - start + 1 >= 2 * p) runs.push_back({start, end, p});
        }
    }
    std::sort(runs.begin(), runs.end());
    runs.erase(std::unique(runs.begin(), runs.end()), runs.end());
    return runs;
}

std::size_t least_rotation(std::string_view s) {
    // Two-candidate scan for the minimum cyclic shift.
    const std::size_t n = s.size();
    std::size_t i = 0;
    std::size_t j = 1;
    std::size_t k = 0;
    while (i < n && j < n && k < n) {
        const auto a = static_cast<unsigned char>(s[(i + k) % n]);
        const auto b = static_cast<unsigned char>(s[(j + k) % n]);
        if (a == b) {
            ++k;
            continue;
        }
        if (a > b)
            i += k + 1;
        else
            j += k + 1;
        if (i == j) ++j;
        k = 0;
    }
    return std::min(i, j);
}

LyndonRoot lyndon_root(const Text& text, const Run& run) {
    const std::string window = text.substr(run.start, run.period);
    const std::size_t offset = least_rotation(window);
    LyndonRoot out;
    out.root = window.substr(offset) + window.substr(0, offset);
    out.head = window.substr(0, offset);
    const index_t rest = run.length() - static_cast<index_t>(offset);
    out.power = rest / run.period;
    out.tail = text.substr(run.start + static_cast<index_t>(offset) + out.power * run.period, rest % run.period);
    return out;
}

RunIndex::RunIndex(std::vector<Run> runs) : runs_(std::move(runs)) {
    if (runs_.empty()) return;
    std::sort(runs_.begin(), runs_.end());
    std::vector<index_t> ids(runs_.size());
    for (std::size_t k = 0; k < ids.size(); ++k) ids[k] = static_cast<index_t>(k);
    index_t lo = runs_.front().start;
    index_t hi = runs_.front().end;
    for (const auto& r : runs_) {
        lo = std::min(lo, r.start);
        hi = std::max(hi, r.end);
    }
    by_start_.reserve(runs_.size());
    by_end_.reserve(runs_.size());
    root_ = build(ids, lo, hi);

    reach_.assign(static_cast<std::size_t>(hi) + 1, -1);
    std::size_t next = 0;
    index_t furthest = -1;
    for (index_t x = 0; x <= hi; ++x) {
        while (next < runs_.size() && runs_[next].start <= x) furthest = std::max(furthest, runs_[next++].end);
        if (furthest >= x) reach_[x] = furthest;
    }
}

index_t RunIndex::build(std::span<index_t> ids, index_t lo, index_t hi) {
    if (ids.empty()) return -1;
    const index_t center = lo + (hi - lo) / 2;
    // Stable three-way partition: left of center, crossing it, right of it.
    // runs_ is sorted by start, so each part stays in ascending start order.
    std::vector<index_t> crossing;
    std::vector<index_t> right;
    std::size_t left_end = 0;
    for (const index_t id : ids) {
        const Run& r = runs_[id];
        if (r.end < center)
            ids[left_end++] = id;
        else if (r.start > center)
            right.push_back(id);
        else
            crossing.push_back(id);
    }
    std::copy(right.begin(), right.end(), ids.begin() + static_cast<std::ptrdiff_t>(left_end));

    Node node;
    node.center = center;
    node.begin = static_cast<index_t>(by_start_.size());
    node.count = static_cast<index_t>(crossing.size());
    by_start_.insert(by_start_.end(), crossing.begin(), crossing.end());
    std::sort(crossing.begin(), crossing.end(), [&](index_t a, index_t b) { return runs_[a].end > runs_[b].end; });
    by_end_.insert(by_end_.end(), crossing.begin(), crossing.end());

    const index_t id = static_cast<index_t>(nodes_.size());
    nodes_.push_back(node);
    const index_t l = build(ids.subspan(0, left_end), lo, center - 1);
    const index_t r = build(ids.subspan(left_end, right.size()), center + 1, hi);
    nodes_[id].left = l;
    nodes_[id].right = r;
    return id;
}

template <class Fn>
void RunIndex::for_each_containing(index_t i, index_t j, Fn&& fn) const {
    if (i < 0 || i >= static_cast<index_t>(reach_.size()) || reach_[i] < j) return;
    index_t cur = root_;
    while (cur >= 0) {
        const Node& node = nodes_[cur];
        const auto by_start = std::span(by_start_).subspan(node.begin, node.count);
        if (j < node.center) {
            for (index_t id : by_start) {
                if (runs_[id].start > i) break;
                fn(runs_[id]);
            }
            cur = node.left;
        } else if (i > node.center) {
            for (index_t id : std::span(by_end_).subspan(node.begin, node.count)) {
                if (runs_[id].end < j) break;
                fn(runs_[id]);
            }
            cur = node.right;
        } else {
            for (index_t id : by_start) {
                if (runs_[id].start > i) break;
                if (runs_[id].end >= j) fn(runs_[id]);
            }
            break;
        }
    }
}

std::vector<Run> RunIndex::containing(index_t i, index_t j) const {
    std::vector<Run> out;
    for_each_containing(i, j, [&](const Run& r) { out.push_back(r); });
    std::sort(out.begin(), out.end());
    return out;
}

PeriodInfo RunIndex::is_periodic(index_t i, index_t j) const {
    assert(i <= j);
    const index_t len = j - i + 1;
    index_t best = -1;
    for_each_containing(i, j, [&](const Run& r) {
        if (2 * r.period <= len && (best < 0 || r.period < best)) best = r.period;
    });
    if (best < 0) return {};
    return {true, best};
}

}  // namespace rpm
