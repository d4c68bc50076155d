#pragma once

#include <algorithm>
#include <span>
#include <stdexcept>
#include <vector>

#include "rpm/rmq.hpp"
#include "rpm/text.hpp"

namespace rpm {

/// Suffix array, inverse, LCP array and an RMQ over LCP for O(1)-ish lcp(i, j).
///
/// The index owns copies of the arrays; the RMQ refers into `lcp_`, so the
/// type is move-only.
class EnhancedIndex {
public:
    explicit EnhancedIndex(const Text& text);

    EnhancedIndex(const EnhancedIndex&) = delete;
    EnhancedIndex& operator=(const EnhancedIndex&) = delete;
    EnhancedIndex(EnhancedIndex&&) noexcept = default;
    EnhancedIndex& operator=(EnhancedIndex&&) noexcept = default;

    index_t size() const noexcept { return static_cast<index_t>(sa_.size()); }
    std::span<const index_t> sa() const noexcept { return sa_; }
    std::span<const index_t> lcp() const noexcept { return lcp_; }
    std::span<const index_t> isa() const noexcept { return isa_; }

    /// Length of the longest common prefix of the suffixes at text positions i and j.
    index_t lcp_query(index_t i, index_t j) const;

    /// Same as lcp_query, without range checks.
    index_t lce(index_t i, index_t j) const noexcept;

    /// Text positions sa[l..r], sorted ascending.
    std::vector<index_t> occurrences_sorted(index_t l, index_t r) const;

private:
    std::vector<index_t> sa_;
    std::vector<index_t> isa_;
    std::vector<index_t> lcp_;
    RangeMin rmq_;
};

EnhancedIndex build_index(const Text& text);

/// An lcp-interval: the SA range [l, r] of suffixes sharing a prefix of
/// length `depth`, maximal for that depth. It stands for an internal node of
/// the suffix tree; r - l + 1 is the frequency of its string.
struct LcpInterval {
    index_t depth = 0;
    index_t l = 0;
    index_t r = 0;
    index_t parent_depth = 0;

    index_t frequency() const noexcept { return r - l + 1; }
    friend bool operator==(const LcpInterval&, const LcpInterval&) = default;
};

/// Visits every lcp-interval once, children before parents, root last.
/// The root interval (depth 0, [0, n-1]) is always reported, with
/// parent_depth 0.
template <class Visitor>
void enumerate_lcp_intervals(const EnhancedIndex& idx, Visitor&& visit) {
    struct Open {
        index_t depth;
        index_t l;
    };
    const auto lcp = idx.lcp();
    const index_t n = idx.size();
    std::vector<Open> stack;
    stack.push_back({0, 0});
    for (index_t i = 1; i <= n; ++i) {
        const index_t h = (i < n) ? lcp[i] : 0;
        index_t lb = i - 1;
        while (h < stack.back().depth) {
            Open top = stack.back();
            stack.pop_back();
            lb = top.l;
            const index_t parent_depth = std::max(h, stack.back().depth);
            visit(LcpInterval{top.depth, top.l, i - 1, parent_depth});
        }
        if (h > stack.back().depth) stack.push_back({h, lb});
    }
    visit(LcpInterval{0, 0, n - 1, 0});
}

/// The lcp-interval tree materialized with parent links, used by the solver's
/// two passes.
class LcpTree {
public:
    struct Node {
        index_t depth;
        index_t l;
        index_t r;
        index_t parent;  // -1 for the root
    };

    explicit LcpTree(const EnhancedIndex& idx);

    /// Nodes in bottom-up order; the root is the last node.
    std::span<const Node> nodes() const noexcept { return nodes_; }
    index_t root() const noexcept { return static_cast<index_t>(nodes_.size()) - 1; }

    /// Deepest node whose interval contains SA rank `rank`.
    index_t leaf_parent(index_t rank) const noexcept { return leaf_parent_[rank]; }

private:
    std::vector<Node> nodes_;
    std::vector<index_t> leaf_parent_;
};

}  // namespace rpm
