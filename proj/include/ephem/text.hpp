#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace ephem {

using Letter = std::uint32_t;
using Index = std::int64_t;

/// A string over the integer alphabet [0, sigma). Every letter is checked
/// to be below sigma, and sigma must leave room for one sentinel letter.
class Text {
public:
    Text() = default;
    Text(std::vector<Letter> letters, std::uint64_t sigma);

    /// Byte string, sigma = 256.
    static Text from_bytes(std::string_view bytes);

    std::span<const Letter> letters() const { return letters_; }
    const std::vector<Letter>& vec() const { return letters_; }
    Index size() const { return static_cast<Index>(letters_.size()); }
    bool empty() const { return letters_.empty(); }
    std::uint64_t sigma() const { return sigma_; }
    Letter operator[](Index i) const { return letters_[static_cast<std::size_t>(i)]; }

    Text reversed() const;

private:
    std::vector<Letter> letters_;
    std::uint64_t sigma_ = 256;
};

/// Largest alphabet accepted for an indexed text of length n:
/// max(2^16, n^4), capped so a sentinel still fits.
std::uint64_t max_sigma_for_length(Index n);

/// Throws std::invalid_argument if t.sigma() > max_sigma_for_length(t.size()).
void require_polynomial_alphabet(const Text& t);

/// Replaces letters by their rank among the distinct letters of s (0-based).
/// Returns the number of distinct letters.
Letter rank_reduce(std::span<const Letter> s, std::vector<Letter>& ranked);

}  // namespace ephem
