#pragma once

#include <span>
#include <vector>

#include "rpm/text.hpp"

namespace rpm {

/// Suffix array by induced sorting. `s` holds letters in [0, upper]. A
/// sentinel smaller than every letter is implied at the end, so a suffix that
/// is a proper prefix of another sorts first.
std::vector<index_t> suffix_array_sais(std::span<const index_t> s, index_t upper);

/// Convenience overload on byte texts.
std::vector<index_t> suffix_array(const Text& text);

/// Kasai et al.: lcp[0] = 0, lcp[r] = lcp of suffixes sa[r-1] and sa[r].
std::vector<index_t> lcp_array_kasai(std::span<const std::uint8_t> text, std::span<const index_t> sa,
                                     std::span<const index_t> isa);

}  // namespace rpm
