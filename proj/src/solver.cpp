#include "rpm/solver.hpp"

#include <cassert>
#include <optional>
#include <stdexcept>
#include <string>

#include "rpm/resilience.hpp"

namespace rpm {

void validate_parameters(index_t tau, index_t k) {
    if (tau < 1) throw std::invalid_argument("tau must be >= 1, got " + std::to_string(tau));
    if (k < 0) throw std::invalid_argument("k must be >= 0, got " + std::to_string(k));
}

namespace {

// Checks prefixes of one string str(v) that all share v's occurrence set.
// The sorted occurrence list and the clusters for per(str(v)) are computed at
// most once and reused across the prefixes probed by a binary search.
class Probe {
public:
    Probe(const ResilienceSolver& solver, index_t l, index_t r, index_t full_length, index_t tau, index_t k,
          ResilienceSolver::Stats* stats)
        : solver_(solver), l_(l), r_(r), full_length_(full_length), tau_(tau), k_(k), stats_(stats) {}

    bool resilient(index_t len) {
        assert(len >= 1 && len <= full_length_);
        const index_t freq = r_ - l_ + 1;
        if (std::int64_t{freq} < std::int64_t{tau_} + k_) return false;
        const index_t pos = solver_.index().sa()[l_];
        const PeriodInfo info = solver_.runs().is_periodic(pos, pos + len - 1);
        if (info.is_periodic && *info.period == full_period()) {
            if (stats_) ++stats_->periodic_checks;
            return periodic_resilient(freq, len, *info.period, tau_, k_, clusters());
        }
        // Either aperiodic, or periodic with a period that no two occurrences
        // are apart by; both keep every position inside at most two occurrences.
        return aperiodic_resilient(freq, len, tau_, k_, [this] { return occurrences(); });
    }

private:
    index_t full_period() {
        if (!full_period_) {
            const index_t pos = solver_.index().sa()[l_];
            const PeriodInfo info = solver_.runs().is_periodic(pos, pos + full_length_ - 1);
            full_period_ = info.is_periodic ? *info.period : -1;
        }
        return *full_period_;
    }

    std::span<const index_t> occurrences() {
        if (!occ_) occ_ = solver_.index().occurrences_sorted(l_, r_);
        return *occ_;
    }

    const ClusterSet& clusters() {
        if (!clusters_)
            clusters_ = create_clusters(occurrences(), full_length_, full_period(), tau_, k_, solver_.index());
        return *clusters_;
    }

    const ResilienceSolver& solver_;
    index_t l_;
    index_t r_;
    index_t full_length_;
    index_t tau_;
    index_t k_;
    ResilienceSolver::Stats* stats_;
    std::optional<index_t> full_period_;
    std::optional<std::vector<index_t>> occ_;
    std::optional<ClusterSet> clusters_;
};

index_t binary_search_edge(Probe& probe, const CutEdge& edge, ResilienceSolver::Stats* stats) {
    index_t lo = edge.upper_depth;
    index_t hi = edge.lower_failed ? edge.lower_depth - 1 : edge.lower_depth;
    while (lo < hi) {
        const index_t mid = lo + (hi - lo + 1) / 2;
        if (stats) ++stats->edge_probes;
        if (probe.resilient(mid))
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

}  // namespace

ResilienceSolver::ResilienceSolver(Text text)
    : text_(std::move(text)), index_(text_), tree_(index_), runs_(compute_runs(text_, index_)) {}

bool ResilienceSolver::is_resilient(index_t l, index_t r, index_t len, index_t tau, index_t k) const {
    validate_parameters(tau, k);
    if (len == 0) return true;
    Probe probe(*this, l, r, len, tau, k, nullptr);
    return probe.resilient(len);
}

index_t ResilienceSolver::solve_cut_edge(const CutEdge& edge, index_t tau, index_t k) const {
    validate_parameters(tau, k);
    const index_t freq = edge.r - edge.l + 1;
    if (std::int64_t{freq} < std::int64_t{tau} + k) return edge.upper_depth;
    Probe probe(*this, edge.l, edge.r, edge.lower_depth, tau, k, nullptr);
    return binary_search_edge(probe, edge, nullptr);
}

OutputArray ResilienceSolver::solve(index_t tau, index_t k) const {
    Stats unused;
    return solve(tau, k, unused);
}

OutputArray ResilienceSolver::solve(index_t tau, index_t k, Stats& stats) const {
    validate_parameters(tau, k);
    const auto nodes = tree_.nodes();
    const auto sa = index_.sa();
    const index_t n = text_.size();
    const index_t root = tree_.root();
    const std::int64_t gate = std::int64_t{tau} + k;

    // Phase 1: bottom-up; a resilient node makes every ancestor resilient.
    std::vector<std::uint8_t> success(nodes.size(), 0);
    success[root] = 1;
    for (index_t id = 0; id < root; ++id) {
        const auto& node = nodes[id];
        if (!success[id] && node.r - node.l + 1 >= gate) {
            ++stats.phase1_checks;
            Probe probe(*this, node.l, node.r, node.depth, tau, k, &stats);
            if (probe.resilient(node.depth)) success[id] = 1;
        }
#ifndef NDEBUG
        else if (success[id] && id != root) {
            // Upward closure: str(u) is a prefix of a resilient child string.
            Probe probe(*this, node.l, node.r, node.depth, tau, k, nullptr);
            assert(probe.resilient(node.depth));
        }
#endif
        if (success[id]) success[node.parent] = 1;
    }

    // Phase 2: refine every edge leaving the resilient part of the tree.
    OutputArray out(static_cast<std::size_t>(n), 0);
    auto resolve = [&](const CutEdge& edge) {
        const index_t freq = edge.r - edge.l + 1;
        if (freq < gate) return edge.upper_depth;
        ++stats.cut_edges;
        Probe probe(*this, edge.l, edge.r, edge.lower_depth, tau, k, &stats);
        return binary_search_edge(probe, edge, &stats);
    };
    for (index_t id = 0; id < root; ++id) {
        const auto& node = nodes[id];
        if (success[id] || !success[node.parent]) continue;
        const index_t m = resolve({nodes[node.parent].depth, node.depth, node.l, node.r, true});
        for (index_t rank = node.l; rank <= node.r; ++rank) out[sa[rank]] = m;
    }
    for (index_t rank = 0; rank < n; ++rank) {
        const index_t parent = tree_.leaf_parent(rank);
        if (!success[parent]) continue;
        out[sa[rank]] = resolve({nodes[parent].depth, n - sa[rank], rank, rank, false});
    }
    return out;
}

OutputArray solve(const Text& text, index_t tau, index_t k) {
    validate_parameters(tau, k);
    if (text.empty()) return {};
    return ResilienceSolver(text).solve(tau, k);
}

std::vector<SubstringRef> list_resilient(const OutputArray& output, const EnhancedIndex& idx) {
    const auto sa = idx.sa();
    const auto lcp = idx.lcp();
    std::vector<SubstringRef> out;
    for (index_t rank = 0; rank < idx.size(); ++rank) {
        const index_t pos = sa[rank];
        for (index_t len = lcp[rank] + 1; len <= output[pos]; ++len) out.push_back({pos, len});
    }
    return out;
}

std::int64_t count_resilient(const OutputArray& output, const EnhancedIndex& idx) {
    const auto sa = idx.sa();
    const auto lcp = idx.lcp();
    std::int64_t total = 0;
    for (index_t rank = 0; rank < idx.size(); ++rank)
        total += std::max<index_t>(0, output[sa[rank]] - lcp[rank]);
    return total;
}

}  // namespace rpm
