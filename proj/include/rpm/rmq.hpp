#pragma once

#include <span>
#include <vector>

#include "rpm/text.hpp"

namespace rpm {

/// Range-minimum over a fixed array. A sparse table over block minima plus an
/// in-block scan keeps space at O(n + (n/B) log(n/B)).
class RangeMin {
public:
    static constexpr index_t kBlock = 32;

    RangeMin() = default;
    explicit RangeMin(std::span<const index_t> values);

    /// min of values[lo..hi], lo <= hi.
    index_t query(index_t lo, index_t hi) const;

private:
    index_t scan(index_t lo, index_t hi) const;

    std::span<const index_t> values_;
    std::vector<std::vector<index_t>> table_;  // table_[j][b]: min of blocks b..b+2^j-1
};

}  // namespace rpm
