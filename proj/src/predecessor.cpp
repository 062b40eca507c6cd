#include "ephem/predecessor.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace ephem {

PredSet::PredSet(std::vector<IntervalEntry> entries, Index universe)
    : entries_(std::move(entries)), universe_(universe) {
    if (universe_ < 0) throw std::invalid_argument("negative predecessor universe");
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        const auto& x = entries_[k];
        if (x.s < 0 || x.s > x.e || x.e >= universe_) {
            throw std::invalid_argument("interval [" + std::to_string(x.s) + "," +
                                        std::to_string(x.e) + "] invalid for universe " +
                                        std::to_string(universe_));
        }
        if (k > 0 && entries_[k - 1].e >= x.s) {
            throw std::invalid_argument("intervals unsorted or overlapping at entry " + std::to_string(k));
        }
    }
    if (entries_.empty()) return;

    keys_.reserve(entries_.size());
    for (const auto& x : entries_) keys_.push_back(x.s);

    const auto buckets = std::bit_ceil(entries_.size());
    const int universe_bits = std::bit_width(static_cast<std::uint64_t>(universe_ - 1));
    shift_ = std::max(0, universe_bits - std::countr_zero(buckets));

    bucket_start_.assign(buckets + 1, static_cast<std::uint32_t>(keys_.size()));
    for (std::size_t k = keys_.size(); k-- > 0;) {
        bucket_start_[static_cast<std::size_t>(keys_[k] >> shift_)] = static_cast<std::uint32_t>(k);
    }
    for (std::size_t b = buckets; b-- > 0;) {
        bucket_start_[b] = std::min(bucket_start_[b], bucket_start_[b + 1]);
    }
}

std::optional<IntervalEntry> PredSet::lookup(Index r) const {
    if (keys_.empty() || r < 0 || r >= universe_) return std::nullopt;
    const auto b = static_cast<std::size_t>(r >> shift_);
    const auto lo = keys_.begin() + bucket_start_[b];
    const auto hi = keys_.begin() + bucket_start_[b + 1];
    const auto it = std::upper_bound(lo, hi, r);
    // keys before lo are all in earlier buckets, hence <= r
    const auto pred = it - keys_.begin() - 1;
    if (pred < 0) return std::nullopt;
    const auto& x = entries_[static_cast<std::size_t>(pred)];
    if (x.e < r) return std::nullopt;
    return x;
}

}  // namespace ephem
