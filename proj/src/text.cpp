#include "ephem/text.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace ephem {

std::uint64_t max_sigma_for_length(Index n) {
    constexpr std::uint64_t kFloor = 1ull << 16;
    // one letter value is reserved for the # sentinel
    constexpr std::uint64_t kCeil = std::numeric_limits<Letter>::max();
    const auto base = static_cast<std::uint64_t>(std::max<Index>(2, n));
    std::uint64_t bound = 1;
    for (int k = 0; k < 4 && bound <= kCeil; ++k) bound *= base;
    return std::min(kCeil, std::max(kFloor, bound));
}

Text::Text(std::vector<Letter> letters, std::uint64_t sigma)
    : letters_(std::move(letters)), sigma_(sigma) {
    if (sigma_ == 0) throw std::invalid_argument("alphabet bound sigma must be positive");
    if (sigma_ > std::numeric_limits<Letter>::max()) {
        throw std::invalid_argument("alphabet bound sigma=" + std::to_string(sigma_) +
                                    " leaves no room for a sentinel letter");
    }
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (letters_[i] >= sigma_) {
            throw std::invalid_argument("letter " + std::to_string(letters_[i]) + " at position " +
                                        std::to_string(i) + " is outside [0, " +
                                        std::to_string(sigma_) + ")");
        }
    }
}

void require_polynomial_alphabet(const Text& t) {
    const auto limit = max_sigma_for_length(t.size());
    if (t.sigma() > limit) {
        throw std::invalid_argument("alphabet bound sigma=" + std::to_string(t.sigma()) +
                                    " exceeds " + std::to_string(limit) + " for a text of length " +
                                    std::to_string(t.size()));
    }
}

Text Text::from_bytes(std::string_view bytes) {
    std::vector<Letter> v(bytes.size());
    std::transform(bytes.begin(), bytes.end(), v.begin(),
                   [](char c) { return static_cast<Letter>(static_cast<unsigned char>(c)); });
    return Text(std::move(v), 256);
}

Text Text::reversed() const {
    Text r;
    r.letters_.assign(letters_.rbegin(), letters_.rend());
    r.sigma_ = sigma_;
    return r;
}

Letter rank_reduce(std::span<const Letter> s, std::vector<Letter>& ranked) {
    std::vector<Letter> alphabet(s.begin(), s.end());
    std::sort(alphabet.begin(), alphabet.end());
    alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
    ranked.resize(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        ranked[i] = static_cast<Letter>(
            std::lower_bound(alphabet.begin(), alphabet.end(), s[i]) - alphabet.begin());
    }
    return static_cast<Letter>(alphabet.size());
}

}  // namespace ephem
