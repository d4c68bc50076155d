#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rpm {

// Positions, lengths and SA ranks. Texts are limited to 2^31 - 1 letters.
using index_t = std::int32_t;

/// The input string S over the byte alphabet. Letters are raw byte codes.
class Text {
public:
    Text() = default;
    explicit Text(std::string_view s);
    explicit Text(std::vector<std::uint8_t> bytes);

    index_t size() const noexcept { return static_cast<index_t>(bytes_.size()); }
    bool empty() const noexcept { return bytes_.empty(); }

    /// Number of distinct letters present.
    int sigma() const noexcept { return sigma_; }

    std::uint8_t operator[](index_t i) const noexcept { return bytes_[static_cast<std::size_t>(i)]; }
    std::span<const std::uint8_t> bytes() const noexcept { return bytes_; }

    std::string_view view() const noexcept {
        return {reinterpret_cast<const char*>(bytes_.data()), bytes_.size()};
    }
    std::string substr(index_t pos, index_t len) const { return std::string(view().substr(pos, len)); }

    /// Distinct letters in increasing order.
    std::vector<std::uint8_t> alphabet() const;

private:
    void count_sigma();

    std::vector<std::uint8_t> bytes_;
    int sigma_ = 0;
};

}  // namespace rpm
