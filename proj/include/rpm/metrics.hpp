#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>

#include "rpm/solver.hpp"
#include "rpm/text.hpp"
#include "rpm/text_index.hpp"

namespace rpm::metrics {

/// Distinct substrings keyed by content, so sets from different texts compare.
using SubstringSet = std::unordered_set<std::string>;

/// Number of distinct substrings occurring at least tau times.
std::int64_t count_tau_frequent(const EnhancedIndex& idx, index_t tau);

/// Resilient-to-frequent ratio: distinct resilient over distinct tau-frequent
/// substrings. Empty when no substring is tau-frequent.
std::optional<double> rfr(const ResilienceSolver& solver, index_t tau, index_t k);
std::optional<double> rfr(const Text& text, index_t tau, index_t k);

/// Distinct resilient substrings described by an OUTPUT array of `text`.
SubstringSet resilient_set(const Text& text, const EnhancedIndex& idx, const OutputArray& output);

/// Distinct substrings of `text` occurring at least tau times. The set holds
/// every string explicitly, so it is meant for small and medium texts.
SubstringSet frequent_set(const Text& text, const EnhancedIndex& idx, index_t tau);

/// Fraction of `mined` substrings occurring fewer than tau times in `version`.
/// Throws std::invalid_argument when `mined` is empty.
double lr(const SubstringSet& mined, const Text& version, index_t tau);

/// |A n B| / |A u B|, with 1.0 for two empty sets.
double jaccard(const SubstringSet& a, const SubstringSet& b);

}  // namespace rpm::metrics
