#include "rpm/text.hpp"

#include <array>
#include <limits>
#include <stdexcept>

namespace rpm {

Text::Text(std::string_view s) : bytes_(s.begin(), s.end()) { count_sigma(); }

Text::Text(std::vector<std::uint8_t> bytes) : bytes_(std::move(bytes)) { count_sigma(); }

void Text::count_sigma() {
    if (bytes_.size() > static_cast<std::size_t>(std::numeric_limits<index_t>::max()))
        throw std::length_error("text longer than 2^31-1 letters is not supported");
    std::array<bool, 256> seen{};
    sigma_ = 0;
    for (auto c : bytes_) {
        if (!seen[c]) {
            seen[c] = true;
            ++sigma_;
        }
    }
}

std::vector<std::uint8_t> Text::alphabet() const {
    std::array<bool, 256> seen{};
    for (auto c : bytes_) seen[c] = true;
    std::vector<std::uint8_t> out;
    for (int c = 0; c < 256; ++c)
        if (seen[static_cast<std::size_t>(c)]) out.push_back(static_cast<std::uint8_t>(c));
    return out;
}

}  // namespace rpm
