#include "ephem/edit_matcher.hpp"

#include <algorithm>
#include <stdexcept>

namespace ephem {

EditMatcher::EditMatcher(Text text, Text pattern)
    : bd_(std::move(text), pattern), sma_(pattern.reversed().letters()) {}

EditMatcher::Junction EditMatcher::junction(const EditOp& op) const {
    const Index n = bd_.text_length();
    const EditRegions g = regions_of(op);
    Junction j;
    if (g.left_end > 0) j.a = bd_.lpf(g.left_end - 1);
    const Index from = g.right_start < n ? state(g.right_start) : 0;
    j.b = sma_.delta(from, op.s.at(0));
    return j;
}

void EditMatcher::occurrences_after_edit_unsorted(const EditOp& op, std::vector<Index>& out) const {
    const Index n = bd_.text_length();
    validate_edit(op, n, bd_.text().sigma(), 1);
    if (op.kind == EditOp::Kind::Delete) {
        if (op.q != op.p) throw std::invalid_argument(to_string(op) + ": only single letters may be deleted");
        bd_.occurrences_after_delete_unsorted(op.q, op.p, out);
        return;
    }
    const EditRegions g = regions_of(op);
    if (g.edited_length(n) < bd_.pattern_length()) return;
    bd_.report_outside(g.left_end, g.right_start, g.right_shift(), out);
    // occurrences covering the new letter, which sits at window offset a
    const Junction j = junction(op);
    bd_.report_junction(j.a, j.b, j.a, g.left_end - j.a, out);
}

std::vector<Index> EditMatcher::occurrences_after_edit(const EditOp& op) const {
    std::vector<Index> out;
    occurrences_after_edit_unsorted(op, out);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace ephem
