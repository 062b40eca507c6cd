#pragma once

#include <span>
#include <vector>

#include <absl/container/flat_hash_map.h>

#include "ephem/text.hpp"

namespace ephem {

/*
 * String matching automaton of X: the minimal DFA for Sigma* X. State k
 * means "the longest suffix of the input read so far that is a prefix of X
 * is X[0..k)". Only transitions leading away from state 0 are stored; there
 * are at most 2|X| of them whatever the alphabet.
 */
class Sma {
public:
    Sma() = default;
    explicit Sma(std::span<const Letter> x);

    Index length() const { return static_cast<Index>(x_.size()); }
    Index delta(Index state, Letter c) const;
    std::size_t stored_transitions() const { return next_.size(); }

private:
    static std::uint64_t key(Index state, Letter c) {
        return (static_cast<std::uint64_t>(state) << 32) | c;
    }

    std::vector<Letter> x_;
    absl::flat_hash_map<std::uint64_t, std::uint32_t> next_;
};

}  // namespace ephem
