#include "rpm/rmq.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

namespace rpm {

RangeMin::RangeMin(std::span<const index_t> values) : values_(values) {
    const index_t n = static_cast<index_t>(values.size());
    const index_t blocks = (n + kBlock - 1) / kBlock;
    if (blocks == 0) return;
    std::vector<index_t> level(static_cast<std::size_t>(blocks));
    for (index_t b = 0; b < blocks; ++b) {
        const index_t lo = b * kBlock;
        const index_t hi = std::min(n, lo + kBlock) - 1;
        level[b] = scan(lo, hi);
    }
    table_.push_back(std::move(level));
    for (index_t width = 1; 2 * width <= blocks; width *= 2) {
        const auto& prev = table_.back();
        std::vector<index_t> next(static_cast<std::size_t>(blocks - 2 * width + 1));
        for (std::size_t b = 0; b < next.size(); ++b) next[b] = std::min(prev[b], prev[b + width]);
        table_.push_back(std::move(next));
    }
}

index_t RangeMin::scan(index_t lo, index_t hi) const {
    return *std::min_element(values_.begin() + lo, values_.begin() + hi + 1);
}

index_t RangeMin::query(index_t lo, index_t hi) const {
    assert(lo <= hi && hi < static_cast<index_t>(values_.size()));
    const index_t bl = lo / kBlock;
    const index_t bh = hi / kBlock;
    if (bh - bl <= 1) return scan(lo, hi);
    index_t best = std::min(scan(lo, (bl + 1) * kBlock - 1), scan(bh * kBlock, hi));
    const index_t first = bl + 1;
    const index_t count = bh - first;
    const int j = std::bit_width(static_cast<unsigned>(count)) - 1;
    const auto& row = table_[static_cast<std::size_t>(j)];
    best = std::min({best, row[first], row[bh - (index_t{1} << j)]});
    return best;
}

}  // namespace rpm
