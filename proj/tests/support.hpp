#pragma once

#include <algorithm>
#include <random>
#include <string_view>
#include <vector>

#include "ephem/text.hpp"

namespace testing_support {

using ephem::Index;
using ephem::Letter;

inline std::vector<Letter> letters(std::string_view s) { return {s.begin(), s.end()}; }
inline ephem::Text text(std::string_view s) { return ephem::Text::from_bytes(s); }

struct Gen {
    std::mt19937_64 rng;
    explicit Gen(std::uint64_t seed) : rng(seed) {}

    Index uniform(Index lo, Index hi) { return std::uniform_int_distribution<Index>(lo, hi)(rng); }

    std::vector<Letter> word(Index len, Letter sigma) {
        std::vector<Letter> w(len);
        for (auto& c : w) c = static_cast<Letter>(uniform(0, sigma - 1));
        return w;
    }

    // Mostly a few distinct letters, sometimes periodic, so that repeats and
    // long borders show up often.
    std::vector<Letter> repetitive(Index len, Letter sigma) {
        if (len == 0) return {};
        switch (uniform(0, 2)) {
            case 0: return word(len, sigma);
            case 1: {
                auto root = word(uniform(1, std::min<Index>(len, 4)), sigma);
                std::vector<Letter> w(len);
                for (Index k = 0; k < len; ++k) w[k] = root[k % root.size()];
                if (uniform(0, 1)) w[uniform(0, len - 1)] = static_cast<Letter>(uniform(0, sigma - 1));
                return w;
            }
            default: return word(len, std::min<Letter>(sigma, 2));
        }
    }
};

// Suffix order by direct comparison; a proper prefix sorts first.
inline std::vector<Index> brute_suffix_array(const std::vector<Letter>& s) {
    std::vector<Index> sa(s.size());
    for (std::size_t k = 0; k < s.size(); ++k) sa[k] = static_cast<Index>(k);
    std::sort(sa.begin(), sa.end(), [&](Index a, Index b) {
        return std::lexicographical_compare(s.begin() + a, s.end(), s.begin() + b, s.end());
    });
    return sa;
}

inline bool starts_with(const std::vector<Letter>& s, Index from, const std::vector<Letter>& x) {
    if (from + static_cast<Index>(x.size()) > static_cast<Index>(s.size())) return false;
    return std::equal(x.begin(), x.end(), s.begin() + from);
}

}  // namespace testing_support
