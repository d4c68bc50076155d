#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rpm/text.hpp"
#include "rpm/text_index.hpp"

namespace rpm {

/// A maximal periodic fragment S[start..end] (inclusive) with smallest period
/// `period`, where 2 * period <= end - start + 1.
struct Run {
    index_t start = 0;
    index_t end = 0;
    index_t period = 0;

    index_t length() const noexcept { return end - start + 1; }
    friend auto operator<=>(const Run&, const Run&) = default;
};

/// All runs of the text, sorted by (start, end, period).
///
/// Lyndon arrays for both letter orders seed the candidates; each candidate is
/// extended with forward and backward LCE queries. The two-argument form
/// reuses an existing index of `text`.
std::vector<Run> compute_runs(const Text& text);
std::vector<Run> compute_runs(const Text& text, const EnhancedIndex& forward);

/// Canonical representation L1 . L^power . L2 of a run with Lyndon root L.
struct LyndonRoot {
    std::string root;
    std::string head;  // L1, a proper suffix of L
    index_t power = 0;
    std::string tail;  // L2, a proper prefix of L
};

LyndonRoot lyndon_root(const Text& text, const Run& run);

/// Start of the lexicographically smallest rotation of `s` (Booth).
std::size_t least_rotation(std::string_view s);

struct PeriodInfo {
    bool is_periodic = false;
    std::optional<index_t> period;
};

/// Runs indexed by a centered interval tree for containment queries.
class RunIndex {
public:
    RunIndex() = default;
    explicit RunIndex(std::vector<Run> runs);

    std::span<const Run> runs() const noexcept { return runs_; }

    /// Runs with start <= i and end >= j.
    std::vector<Run> containing(index_t i, index_t j) const;

    /// Whether S[i..j] is periodic and, if so, its smallest period.
    PeriodInfo is_periodic(index_t i, index_t j) const;

private:
    // Runs crossing `center` occupy [begin, begin + count) of both by_start_
    // (ascending start) and by_end_ (descending end).
    struct Node {
        index_t center = 0;
        index_t left = -1;
        index_t right = -1;
        index_t begin = 0;
        index_t count = 0;
    };

    index_t build(std::span<index_t> ids, index_t lo, index_t hi);

    template <class Fn>
    void for_each_containing(index_t i, index_t j, Fn&& fn) const;

    std::vector<Run> runs_;
    std::vector<Node> nodes_;
    std::vector<index_t> by_start_;
    std::vector<index_t> by_end_;
    index_t root_ = -1;
    // reach_[x]: largest end among runs covering x, or -1. Lets most queries
    // skip the tree.
    std::vector<index_t> reach_;
};

}  // namespace rpm
