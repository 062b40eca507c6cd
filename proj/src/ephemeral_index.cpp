#include "ephem/ephemeral_index.hpp"

#include <algorithm>
#include <stdexcept>

namespace ephem {

EphemeralTextIndex::EphemeralTextIndex(Text text)
    : fwd_(text), rev_(text.reversed()), fwd_tree_(fwd_), rev_tree_(rev_) {}

namespace {

SuffixPrefixTree decorated_tree(const SuffixTree& st, std::span<const Letter> pattern, SaInterval* whole) {
    auto ms = matching_statistics(st, pattern);
    if (whole) *whole = ms.suf_interval[0];
    return SuffixPrefixTree(pattern, std::move(ms.suf_interval));
}

// Longest prefix of P that is a suffix of s.
Index prefix_of_p_ending_s(std::span<const Letter> p, std::span<const Letter> s) {
    for (auto len = std::min(p.size(), s.size()); len > 0; --len) {
        if (std::equal(p.begin(), p.begin() + len, s.end() - len)) return static_cast<Index>(len);
    }
    return 0;
}

// Longest suffix of P that is a prefix of s.
Index suffix_of_p_starting_s(std::span<const Letter> p, std::span<const Letter> s) {
    for (auto len = std::min(p.size(), s.size()); len > 0; --len) {
        if (std::equal(p.end() - len, p.end(), s.begin())) return static_cast<Index>(len);
    }
    return 0;
}

}  // namespace

PatternHandle::PatternHandle(const EphemeralTextIndex& index, Text pattern, Index epsilon)
    : index_(&index),
      pattern_(std::move(pattern)),
      epsilon_(epsilon),
      prefsuf_(pattern_.letters()) {
    if (epsilon_ < 1) throw std::invalid_argument("epsilon must be at least 1");
    const Index n = index.size();
    tree_ = decorated_tree(index.forward_tree(), pattern_.letters(), &interval_);
    tree_set_ = PredSet(decompose_disjoint(tree_), n);
    groups_ = ContextGroups(tree_, pattern_.letters(), epsilon_, n);
    const Text rev = pattern_.reversed();
    rev_tree_ = decorated_tree(index.reverse_tree(), rev.letters(), nullptr);
    rev_tree_set_ = PredSet(decompose_disjoint(rev_tree_), n);
}

template <typename Sink>
void PatternHandle::run(const EditOp& op, Sink&& sink) const {
    const Index n = index_->size();
    const Index m = pattern_length();
    validate_edit(op, n, index_->text().sigma(), epsilon_);
    const EditRegions g = regions_of(op);
    if (g.edited_length(n) < m) return;

    const TextIndex& fwd = index_->forward();
    const std::span<const Letter> block = op.s;
    const std::span<const Letter> p = pattern_.letters();
    thread_local std::vector<Index> scratch;

    // occurrences the edit does not touch
    if (g.left_end >= m) {
        scratch.clear();
        fwd.report_starts(interval_, 0, g.left_end - m, scratch);
        for (Index t : scratch) sink(t, OccurrenceClass::LeftOnly);
    }
    if (n - g.right_start >= m) {
        scratch.clear();
        fwd.report_starts(interval_, g.right_start, n - 1, scratch);
        const Index shift = g.right_shift();
        for (Index t : scratch) sink(t + shift, OccurrenceClass::RightOnly);
    }

    auto junction = [&](Index a, Index b, Index min_end, Index origin, OccurrenceClass cls) {
        if (a == 0 || b == 0) return;
        // start in the first a letters, end at window offset >= min_end
        const auto hits = prefsuf_.query(a, b).restrict_to(std::max<Index>(0, min_end - m + 1), a - 1);
        for (Index k = 0; k < hits.count; ++k) sink(origin + hits.first + k * hits.diff, cls);
    };

    // U: longest prefix of P that is a suffix of L
    Index left_a = 0;
    if (g.left_end > 0) {
        const Index r = index_->reverse().isa(n - g.left_end);
        if (auto hit = rev_tree_set_.lookup(r)) left_a = m - hit->i;
    }
    // longest suffix of P that is a prefix of R
    Index right_b = 0;
    if (g.right_start < n) {
        if (auto hit = tree_set_.lookup(fwd.isa(g.right_start))) right_b = m - hit->i;
    }

    // L..R, through the whole block
    if (left_a > 0 && g.right_start < n) {
        Index b = 0;
        if (g.block == 0) {
            b = right_b;
        } else if (const PredSet* set = groups_.find(block)) {
            if (auto hit = set->lookup(fwd.isa(g.right_start))) b = g.block + m - hit->i;
        }
        junction(left_a, b, left_a + g.block, g.left_end - left_a, OccurrenceClass::Spanning);
    }
    if (g.block == 0) return;

    // M..R
    const Index block_a = prefix_of_p_ending_s(p, block);
    junction(block_a, right_b, block_a, g.left_end + g.block - block_a, OccurrenceClass::BlockToRight);

    // L..M
    const Index block_b = suffix_of_p_starting_s(p, block);
    junction(left_a, block_b, left_a, g.left_end - left_a, OccurrenceClass::LeftToBlock);

    // inside M
    for (Index t = 0; t + m <= g.block; ++t) {
        if (std::equal(p.begin(), p.end(), block.begin() + t)) sink(g.left_end + t, OccurrenceClass::BlockOnly);
    }
}

void PatternHandle::occurrences_after_unsorted(const EditOp& op, std::vector<Index>& out) const {
    run(op, [&](Index pos, OccurrenceClass) { out.push_back(pos); });
}

std::vector<Index> PatternHandle::occurrences_after(const EditOp& op) const {
    std::vector<Index> out;
    occurrences_after_unsorted(op, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<Index, OccurrenceClass>> PatternHandle::occurrences_tagged(const EditOp& op) const {
    std::vector<std::pair<Index, OccurrenceClass>> out;
    run(op, [&](Index pos, OccurrenceClass cls) { out.emplace_back(pos, cls); });
    return out;
}

}  // namespace ephem
