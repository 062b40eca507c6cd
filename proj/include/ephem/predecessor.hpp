#pragma once

#include <optional>
#include <vector>

#include "ephem/text.hpp"

namespace ephem {

/// SA-rank interval [s, e] labelled with the pattern suffix start i.
struct IntervalEntry {
    Index s = 0;
    Index e = 0;
    Index i = 0;
    friend bool operator==(const IntervalEntry&, const IntervalEntry&) = default;
};

/*
 * Static predecessor search over sorted, pairwise disjoint intervals of
 * [0, universe). The universe is cut into as many equal buckets as there are
 * keys (rounded up to a power of two); a query jumps to its bucket and
 * binary-searches the few keys inside it, falling back to the last key of
 * the preceding buckets.
 */
class PredSet {
public:
    PredSet() = default;
    /// Throws std::invalid_argument if entries are unsorted, overlapping or
    /// outside [0, universe).
    PredSet(std::vector<IntervalEntry> entries, Index universe);

    /// The entry with s <= r <= e, if any.
    std::optional<IntervalEntry> lookup(Index r) const;

    const std::vector<IntervalEntry>& entries() const { return entries_; }
    Index universe() const { return universe_; }
    bool empty() const { return entries_.empty(); }

private:
    std::vector<IntervalEntry> entries_;
    std::vector<Index> keys_;
    std::vector<std::uint32_t> bucket_start_;
    Index universe_ = 0;
    int shift_ = 0;
};

}  // namespace ephem
