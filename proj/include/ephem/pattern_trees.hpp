#pragma once

#include <span>
#include <string>
#include <vector>

#include <absl/container/flat_hash_map.h>

#include "ephem/predecessor.hpp"
#include "ephem/text.hpp"
#include "ephem/text_index.hpp"

namespace ephem {

/*
 * TREE(P): one node per suffix P[i..m) plus the root, which is the empty
 * suffix and has id m. The parent of a suffix is its longest proper prefix
 * that is also a suffix of P. Node i is decorated with the SA interval of
 * P[i..m) in the text (empty when it does not occur).
 */
class SuffixPrefixTree {
public:
    SuffixPrefixTree() = default;
    /// decoration[i] is the text SA interval of P[i..m).
    SuffixPrefixTree(std::span<const Letter> pattern, std::vector<SaInterval> decoration);

    Index pattern_length() const { return m_; }
    Index node_count() const { return m_ + 1; }
    Index root() const { return m_; }
    Index parent(Index i) const { return parent_[i]; }
    std::span<const Index> children(Index i) const {
        return {child_list_.data() + child_begin_[i], child_list_.data() + child_begin_[i + 1]};
    }
    SaInterval decoration(Index i) const { return i == m_ ? SaInterval::none() : decoration_[i]; }
    /// Non-root nodes in lexicographic order of their suffixes, which is a
    /// preorder of the tree.
    const std::vector<Index>& preorder() const { return preorder_; }

private:
    Index m_ = 0;
    std::vector<Index> parent_;
    std::vector<std::size_t> child_begin_;
    std::vector<Index> child_list_;
    std::vector<SaInterval> decoration_;
    std::vector<Index> preorder_;
};

/// Splits each decorated interval around the intervals of its decorated
/// children, so every SA rank is labelled by the longest suffix of P that
/// prefixes it. Sorted by s. Throws std::invalid_argument when a child's
/// interval is not nested in its parent's.
std::vector<IntervalEntry> decompose_disjoint(const SuffixPrefixTree& tree);

/*
 * For every context S with 1 <= |S| <= max_len occurring in P, the tree
 * TREE(P) restricted to the suffixes P[i..m), 0 < i < m, preceded by S,
 * decomposed within the group: a rank is labelled by the longest suffix of
 * the group that prefixes it.
 */
class ContextGroups {
public:
    ContextGroups() = default;
    ContextGroups(const SuffixPrefixTree& tree, std::span<const Letter> pattern, Index max_len,
                  Index universe);

    Index max_len() const { return max_len_; }
    std::size_t group_count() const { return sets_.size(); }
    /// nullptr when S does not occur in P (or is longer than max_len).
    const PredSet* find(std::span<const Letter> context) const;
    /// Every group with its context, in no particular order.
    std::vector<std::pair<std::vector<Letter>, const PredSet*>> groups() const;

private:
    Index max_len_ = 0;
    absl::flat_hash_map<std::u32string, std::size_t> ids_;
    std::vector<PredSet> sets_;
};

}  // namespace ephem
