#include "rpm/metrics.hpp"

#include <algorithm>
#include <stdexcept>

namespace rpm::metrics {

std::int64_t count_tau_frequent(const EnhancedIndex& idx, index_t tau) {
    const index_t n = idx.size();
    if (tau <= 1) {
        std::int64_t total = 0;
        for (index_t j = 0; j < n; ++j) total += n - idx.sa()[j] - idx.lcp()[j];
        return total;
    }
    // Every string on the edge into an interval shares the interval's frequency.
    std::int64_t total = 0;
    enumerate_lcp_intervals(idx, [&](const LcpInterval& in) {
        if (in.frequency() >= tau) total += in.depth - in.parent_depth;
    });
    return total;
}

std::optional<double> rfr(const ResilienceSolver& solver, index_t tau, index_t k) {
    validate_parameters(tau, k);
    const std::int64_t frequent = count_tau_frequent(solver.index(), tau);
    if (frequent == 0) return std::nullopt;
    const auto output = solver.solve(tau, k);
    return static_cast<double>(count_resilient(output, solver.index())) / static_cast<double>(frequent);
}

std::optional<double> rfr(const Text& text, index_t tau, index_t k) {
    validate_parameters(tau, k);
    if (text.empty()) return std::nullopt;
    return rfr(ResilienceSolver(text), tau, k);
}

SubstringSet resilient_set(const Text& text, const EnhancedIndex& idx, const OutputArray& output) {
    SubstringSet out;
    for (const auto& ref : list_resilient(output, idx)) out.insert(text.substr(ref.pos, ref.len));
    return out;
}

SubstringSet frequent_set(const Text& text, const EnhancedIndex& idx, index_t tau) {
    SubstringSet out;
    const auto sa = idx.sa();
    if (tau <= 1) {
        for (index_t j = 0; j < idx.size(); ++j)
            for (index_t len = idx.lcp()[j] + 1; len <= text.size() - sa[j]; ++len) out.insert(text.substr(sa[j], len));
        return out;
    }
    enumerate_lcp_intervals(idx, [&](const LcpInterval& in) {
        if (in.frequency() < tau) return;
        for (index_t len = in.parent_depth + 1; len <= in.depth; ++len) out.insert(text.substr(sa[in.l], len));
    });
    return out;
}

double lr(const SubstringSet& mined, const Text& version, index_t tau) {
    if (mined.empty()) throw std::invalid_argument("lr: mined set is empty");
    if (tau < 1) throw std::invalid_argument("lr: tau must be >= 1");
    std::int64_t lost = 0;
    if (version.empty()) return 1.0;
    const EnhancedIndex idx(version);
    const auto sa = idx.sa();
    const auto v = version.view();
    for (const auto& p : mined) {
        // Suffixes starting with p form one contiguous SA range.
        const auto lo = std::lower_bound(sa.begin(), sa.end(), p, [&](index_t s, const std::string& pat) {
            return v.substr(s, pat.size()) < pat;
        });
        const auto hi = std::upper_bound(lo, sa.end(), p, [&](const std::string& pat, index_t s) {
            return pat < v.substr(s, pat.size());
        });
        if (hi - lo < tau) ++lost;
    }
    return static_cast<double>(lost) / static_cast<double>(mined.size());
}

double jaccard(const SubstringSet& a, const SubstringSet& b) {
    if (a.empty() && b.empty()) return 1.0;
    const SubstringSet& small = a.size() <= b.size() ? a : b;
    const SubstringSet& large = a.size() <= b.size() ? b : a;
    std::size_t common = 0;
    for (const auto& s : small) common += large.count(s);
    const std::size_t uni = a.size() + b.size() - common;
    return static_cast<double>(common) / static_cast<double>(uni);
}

}  // namespace rpm::metrics
