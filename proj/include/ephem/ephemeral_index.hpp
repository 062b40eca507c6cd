#pragma once

#include <vector>

#include "ephem/edit_op.hpp"
#include "ephem/pattern_trees.hpp"
#include "ephem/predecessor.hpp"
#include "ephem/prefix_suffix.hpp"
#include "ephem/suffix_tree.hpp"
#include "ephem/text_index.hpp"

namespace ephem {

/// T and reverse(T), each with suffix array, 3-sided reporting and a
/// suffix tree with suffix links. Built once per text.
class EphemeralTextIndex {
public:
    explicit EphemeralTextIndex(Text text);

    Index size() const { return fwd_.size(); }
    const Text& text() const { return fwd_.text(); }
    const TextIndex& forward() const { return fwd_; }
    const TextIndex& reverse() const { return rev_; }
    const SuffixTree& forward_tree() const { return fwd_tree_; }
    const SuffixTree& reverse_tree() const { return rev_tree_; }

private:
    TextIndex fwd_;
    TextIndex rev_;
    SuffixTree fwd_tree_;
    SuffixTree rev_tree_;
};

/// Occurrence classes by where the occurrence starts and ends relative to
/// the left part L, the inserted block M and the right part R of T'.
enum class OccurrenceClass {
    LeftOnly = 1,    // L..L
    RightOnly = 2,   // R..R
    LeftToBlock = 3, // L..M
    BlockToRight = 4,// M..R
    Spanning = 5,    // L..R
    BlockOnly = 6,   // M..M
};

/*
 * Per-pattern state for answering "where does P occur in T after this one
 * edit" against an EphemeralTextIndex, which must outlive the handle. Size
 * O(epsilon * m), independent of n. Queries never mutate anything, so an
 * edit is reverted by simply not applying it again.
 */
class PatternHandle {
public:
    PatternHandle(const EphemeralTextIndex& index, Text pattern, Index epsilon);

    Index pattern_length() const { return pattern_.size(); }
    Index epsilon() const { return epsilon_; }
    const Text& pattern() const { return pattern_; }

    /// Sorted occurrences of P in the edited text. Throws
    /// std::invalid_argument on an invalid op.
    std::vector<Index> occurrences_after(const EditOp& op) const;
    /// Same set, unsorted, appended to out.
    void occurrences_after_unsorted(const EditOp& op, std::vector<Index>& out) const;
    /// Every occurrence tagged with the query that found it.
    std::vector<std::pair<Index, OccurrenceClass>> occurrences_tagged(const EditOp& op) const;

    SaInterval text_interval() const { return interval_; }
    const PrefSufIndex& prefsuf() const { return prefsuf_; }
    const SuffixPrefixTree& tree() const { return tree_; }
    const PredSet& tree_set() const { return tree_set_; }
    const ContextGroups& groups() const { return groups_; }
    const SuffixPrefixTree& reverse_tree() const { return rev_tree_; }
    const PredSet& reverse_tree_set() const { return rev_tree_set_; }

private:
    template <typename Sink>
    void run(const EditOp& op, Sink&& sink) const;

    const EphemeralTextIndex* index_;
    Text pattern_;
    Index epsilon_;
    PrefSufIndex prefsuf_;
    SaInterval interval_;
    SuffixPrefixTree tree_;
    PredSet tree_set_;
    ContextGroups groups_;
    SuffixPrefixTree rev_tree_;
    PredSet rev_tree_set_;
};

}  // namespace ephem
