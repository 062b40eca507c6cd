#pragma once

#include <vector>

#include "ephem/prefix_suffix.hpp"
#include "ephem/text_index.hpp"

namespace ephem {

/*
 * Both T and P known in advance; answers "where does P occur after deleting
 * T[q..p]" in O(Occ) time with no predecessor search. Preprocessing is
 * linear in n + m.
 */
class BlockDeleteMatcher {
public:
    BlockDeleteMatcher(Text text, Text pattern);

    Index text_length() const { return index_.size(); }
    Index pattern_length() const { return pattern_.size(); }
    const Text& text() const { return index_.text(); }
    const Text& pattern() const { return pattern_; }
    const TextIndex& text_index() const { return index_; }
    const PrefSufIndex& prefsuf() const { return prefsuf_; }
    SaInterval text_interval() const { return interval_; }

    /// Longest suffix of P that is a prefix of T[j..n).
    Index lsp(Index j) const { return lsp_[j]; }
    /// Longest prefix of P that is a suffix of T[0..p].
    Index lpf(Index p) const { return lpf_[p]; }

    /// Sorted occurrences of P in T[0..q) T[p+1..n). Throws
    /// std::invalid_argument unless 0 <= q <= p < n.
    std::vector<Index> occurrences_after_delete(Index q, Index p) const;
    void occurrences_after_delete_unsorted(Index q, Index p, std::vector<Index>& out) const;

    /// Appends the untouched occurrences: those ending before left_end and
    /// those starting at or after right_start, shifted by `shift`.
    void report_outside(Index left_end, Index right_start, Index shift, std::vector<Index>& out) const;
    /// Appends origin + t for every t in prefsuf(a, b) with a - m < t <= last_start.
    void report_junction(Index a, Index b, Index last_start, Index origin, std::vector<Index>& out) const;

private:
    TextIndex index_;
    Text pattern_;
    PrefSufIndex prefsuf_;
    SaInterval interval_;
    std::vector<Index> lsp_;
    std::vector<Index> lpf_;
};

}  // namespace ephem
