#pragma once

#include <span>
#include <vector>

#include "ephem/text.hpp"

namespace ephem {

/// Suffix array of s by induced sorting. Letters are rank-reduced first,
/// so any Letter values are accepted; the rest of the construction is linear.
std::vector<Index> build_suffix_array(std::span<const Letter> s);

/// Kasai et al.: lcp[k] = LCP(s[sa[k-1]..], s[sa[k]..]), lcp[0] = 0.
std::vector<Index> build_lcp(std::span<const Letter> s, const std::vector<Index>& sa,
                             const std::vector<Index>& isa);

std::vector<Index> invert_permutation(const std::vector<Index>& sa);

}  // namespace ephem
