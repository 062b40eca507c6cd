#pragma once

#include <vector>

#include "ephem/rmq.hpp"
#include "ephem/text.hpp"

namespace ephem {

/// Inclusive range [lo, hi] of suffix-array ranks, or empty.
struct SaInterval {
    Index lo = 0;
    Index hi = -1;

    static SaInterval none() { return {}; }
    bool empty() const { return hi < lo; }
    Index size() const { return empty() ? 0 : hi - lo + 1; }
    bool contains(Index r) const { return lo <= r && r <= hi; }
    friend bool operator==(const SaInterval&, const SaInterval&) = default;
};

/// Suffix array, its inverse, and range-min/range-max over SA values.
/// Immutable once built.
class TextIndex {
public:
    explicit TextIndex(Text text);

    const Text& text() const { return text_; }
    Index size() const { return text_.size(); }
    const std::vector<Index>& sa() const { return sa_; }
    const std::vector<Index>& isa() const { return isa_; }
    const std::vector<Index>& lcp() const { return lcp_; }
    Index sa(Index rank) const { return sa_[rank]; }
    Index isa(Index pos) const { return isa_[pos]; }

    /// Appends { sa[k] : k in r, lo_pos <= sa[k] <= hi_pos } to out, in no
    /// particular order. Output-sensitive when lo_pos == 0 (range-min route)
    /// or hi_pos >= n-1 (range-max route); with both bounds interior the
    /// range-min route also walks the values below lo_pos.
    void report_starts(SaInterval r, Index lo_pos, Index hi_pos, std::vector<Index>& out) const;

private:
    Text text_;
    std::vector<Index> sa_;
    std::vector<Index> isa_;
    std::vector<Index> lcp_;
    RangeArgMin rmq_min_;
    RangeArgMax rmq_max_;
};

}  // namespace ephem
