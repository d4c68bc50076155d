#pragma once

#include <cstdint>
#include <vector>

#include "rpm/runs.hpp"
#include "rpm/text.hpp"
#include "rpm/text_index.hpp"

namespace rpm {

/// lengths[i] = length of the longest (tau, k)-resilient prefix of S[i..n-1].
using OutputArray = std::vector<index_t>;

/// A substring referenced by one of its occurrences.
struct SubstringRef {
    index_t pos = 0;
    index_t len = 0;
    friend bool operator==(const SubstringRef&, const SubstringRef&) = default;
};

/// Rejects tau < 1 or k < 0. Larger values are valid and simply yield
/// all-zero outputs once no substring can pass the frequency gate.
void validate_parameters(index_t tau, index_t k);

/// One edge (u, v) of the lcp-interval tree crossing the cut: u resilient, v not
/// known to be. [l, r] is v's SA interval, shared by every prefix of str(v)
/// longer than sd(u).
struct CutEdge {
    index_t upper_depth = 0;  // sd(u)
    index_t lower_depth = 0;  // sd(v)
    index_t l = 0;
    index_t r = 0;
    bool lower_failed = true;  // v itself was checked and is not resilient
};

/// The index-backed engine. Construction builds the suffix array, LCP, the
/// lcp-interval tree and the run index once; solve() may then be called for
/// any number of (tau, k) pairs, concurrently if desired.
class ResilienceSolver {
public:
    /// Throws std::invalid_argument for an empty text.
    explicit ResilienceSolver(Text text);

    const Text& text() const noexcept { return text_; }
    const EnhancedIndex& index() const noexcept { return index_; }
    const LcpTree& tree() const noexcept { return tree_; }
    const RunIndex& runs() const noexcept { return runs_; }

    OutputArray solve(index_t tau, index_t k) const;

    /// Largest l in [sd(u), sd(v)] whose length-l prefix of str(v) is resilient.
    index_t solve_cut_edge(const CutEdge& edge, index_t tau, index_t k) const;

    /// Whether the length-`len` prefix of suffix sa[l], whose occurrences are
    /// exactly sa[l..r], is (tau, k)-resilient.
    bool is_resilient(index_t l, index_t r, index_t len, index_t tau, index_t k) const;

    struct Stats {
        std::int64_t phase1_checks = 0;
        std::int64_t periodic_checks = 0;
        std::int64_t cut_edges = 0;
        std::int64_t edge_probes = 0;
    };
    /// solve() that also reports how much work each phase did.
    OutputArray solve(index_t tau, index_t k, Stats& stats) const;

private:
    Text text_;
    EnhancedIndex index_;
    LcpTree tree_;
    RunIndex runs_;
};

/// One-shot solve; an empty text gives an empty array.
OutputArray solve(const Text& text, index_t tau, index_t k);

/// Each distinct resilient substring exactly once, in suffix-array order.
std::vector<SubstringRef> list_resilient(const OutputArray& output, const EnhancedIndex& idx);

/// Number of distinct resilient substrings, without listing them.
std::int64_t count_resilient(const OutputArray& output, const EnhancedIndex& idx);

}  // namespace rpm
