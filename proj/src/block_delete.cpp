#include "ephem/block_delete.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "ephem/suffix_tree.hpp"

namespace ephem {

BlockDeleteMatcher::BlockDeleteMatcher(Text text, Text pattern)
    : index_(text), pattern_(std::move(pattern)), prefsuf_(pattern_.letters()) {
    const Index n = index_.size();
    {
        const MarkedGst gst(index_.text(), pattern_);
        lsp_ = gst.dma_lengths();
        interval_ = gst.text_interval(gst.pattern_node());
    }
    const MarkedGst rev(index_.text().reversed(), pattern_.reversed());
    lpf_.resize(n);
    for (Index p = 0; p < n; ++p) lpf_[p] = rev.dma_length(n - 1 - p);
}

void BlockDeleteMatcher::report_outside(Index left_end, Index right_start, Index shift,
                                        std::vector<Index>& out) const {
    const Index n = text_length();
    const Index m = pattern_length();
    if (left_end >= m) index_.report_starts(interval_, 0, left_end - m, out);
    if (n - right_start >= m) {
        const auto from = out.size();
        index_.report_starts(interval_, right_start, n - 1, out);
        for (auto k = from; k < out.size(); ++k) out[k] += shift;
    }
}

void BlockDeleteMatcher::report_junction(Index a, Index b, Index last_start, Index origin,
                                         std::vector<Index>& out) const {
    const Index m = pattern_length();
    if (a + b < m) return;
    const auto hits = prefsuf_.query(a, b).restrict_to(std::max<Index>(0, a - m + 1), last_start);
    for (Index k = 0; k < hits.count; ++k) out.push_back(origin + hits.first + k * hits.diff);
}

void BlockDeleteMatcher::occurrences_after_delete_unsorted(Index q, Index p, std::vector<Index>& out) const {
    const Index n = text_length();
    if (q < 0 || q > p || p >= n) {
        throw std::invalid_argument("Delete(" + std::to_string(q) + "," + std::to_string(p) +
                                    "): need 0 <= q <= p < n (n=" + std::to_string(n) + ")");
    }
    if (n - (p - q + 1) < pattern_length()) return;
    report_outside(q, p + 1, -(p - q + 1), out);
    if (q > 0 && p < n - 1) {
        const Index a = lpf_[q - 1];
        report_junction(a, lsp_[p + 1], a - 1, q - a, out);
    }
}

std::vector<Index> BlockDeleteMatcher::occurrences_after_delete(Index q, Index p) const {
    std::vector<Index> out;
    occurrences_after_delete_unsorted(q, p, out);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace ephem
