#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "rpm/solver.hpp"
#include "rpm/text.hpp"

namespace rpm::dp {

/// Start positions of `pattern` in `text`, ascending (Knuth-Morris-Pratt).
std::vector<index_t> kmp_occurrences(std::string_view text, std::string_view pattern);

/// Failure function: border[i] = length of the longest proper border of pattern[0..i].
std::vector<index_t> kmp_failure(std::string_view pattern);

/// Maximum number of intervals [s, s + length - 1], s in `starts` (ascending),
/// hit by at most `points` points. Candidate points are the right endpoints.
/// O(points * f^2) time; the f x f gain matrix is materialized only for
/// f <= w_cap, otherwise its entries are derived on the fly from prefix counts.
std::int64_t max_stabbed(std::span<const index_t> starts, index_t length, index_t points,
                         std::size_t w_cap = 2048);

/// Whether `pattern` (occurring at `occ`) stays tau-frequent under every set
/// of k sentinel substitutions.
bool dp_resilient(std::span<const index_t> occ, index_t length, index_t tau, index_t k);

/// Per-position binary search over prefix lengths, deciding each candidate
/// with KMP and max_stabbed. Serial reference.
OutputArray solve_dp(const Text& text, index_t tau, index_t k);

/// Same as solve_dp, positions distributed over OpenMP threads.
OutputArray solve_dp_parallel(const Text& text, index_t tau, index_t k);

}  // namespace rpm::dp
