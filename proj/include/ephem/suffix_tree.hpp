#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include <absl/container/flat_hash_map.h>

#include "ephem/text.hpp"
#include "ephem/text_index.hpp"

namespace ephem {

using NodeId = std::uint32_t;
inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();

/*
 * Compacted trie of all suffixes of a string, built from its suffix array
 * and LCP array. Explicit nodes are the root, branching nodes and terminal
 * nodes (one per suffix). A suffix that is a prefix of a longer suffix gets
 * a terminal node with children, so no end marker is needed.
 *
 * Every node stores its string depth, parent, SA interval and one
 * occurrence position; the edge into v spells
 * s[pos(v) + depth(parent(v)) .. pos(v) + depth(v)).
 */
class SuffixTree {
public:
    struct Options {
        bool suffix_links = true;
        bool child_index = true;
    };

    SuffixTree() = default;
    SuffixTree(std::span<const Letter> s, const std::vector<Index>& sa,
               const std::vector<Index>& isa, const std::vector<Index>& lcp, Options opts);
    SuffixTree(std::span<const Letter> s, const std::vector<Index>& sa,
               const std::vector<Index>& isa, const std::vector<Index>& lcp)
        : SuffixTree(s, sa, isa, lcp, Options{}) {}
    explicit SuffixTree(const TextIndex& idx)
        : SuffixTree(idx.text().letters(), idx.sa(), idx.isa(), idx.lcp()) {}

    static constexpr NodeId root() { return 0; }

    std::size_t node_count() const { return depth_.size(); }
    Index length() const { return static_cast<Index>(str_.size()); }
    Letter letter(Index pos) const { return str_[pos]; }

    Index depth(NodeId v) const { return depth_[v]; }
    NodeId parent(NodeId v) const { return parent_[v]; }
    SaInterval interval(NodeId v) const { return {lo_[v], hi_[v]}; }
    Index pos(NodeId v) const { return pos_[v]; }
    bool is_terminal(NodeId v) const { return terminal_[v]; }
    /// Suffix link; kNoNode when built without links. slink(root) = root.
    NodeId slink(NodeId v) const { return slink_.empty() ? kNoNode : slink_[v]; }
    Letter first_letter(NodeId v) const { return str_[pos_[v] + depth_[parent_[v]]]; }

    std::span<const NodeId> children(NodeId v) const {
        return {child_list_.data() + child_begin_[v], child_list_.data() + child_begin_[v + 1]};
    }
    /// Child of v whose edge starts with c, or kNoNode. Expected O(1).
    NodeId child(NodeId v, Letter c) const;

    /// Terminal node of the suffix starting at pos.
    NodeId node_of_suffix(Index pos) const { return node_of_suffix_[pos]; }

private:
    NodeId add_node(Index depth, Index lo, NodeId parent);

    std::vector<Letter> str_;
    std::vector<Index> depth_;
    std::vector<NodeId> parent_;
    std::vector<Index> lo_;
    std::vector<Index> hi_;
    std::vector<Index> pos_;
    std::vector<bool> terminal_;
    std::vector<NodeId> slink_;
    std::vector<std::size_t> child_begin_;
    std::vector<NodeId> child_list_;
    std::vector<NodeId> node_of_suffix_;
    absl::flat_hash_map<std::uint64_t, NodeId> edges_;
};

/// SA interval of the locus of x in st (empty if x does not occur).
SaInterval locate(const SuffixTree& st, std::span<const Letter> x);

/// Matching statistics of a pattern against the text of st.
struct MatchingStats {
    /// ms_len[i]: longest prefix of P[i..m) occurring in the text.
    std::vector<Index> ms_len;
    /// SA interval of P[i..m) when it occurs in full, else empty.
    std::vector<SaInterval> suf_interval;
};

MatchingStats matching_statistics(const SuffixTree& st, std::span<const Letter> pattern);

/*
 * Generalized suffix tree of T#P with the nodes spelling nonempty suffixes
 * of P marked, and for every text position j the deepest marked ancestor of
 * the leaf of T[j..): the longest suffix of P that is a prefix of T[j..n).
 */
class MarkedGst {
public:
    MarkedGst(const Text& text, const Text& pattern);

    const SuffixTree& tree() const { return tree_; }
    Index text_length() const { return n_; }
    Index pattern_length() const { return m_; }

    bool is_marked(NodeId v) const { return suffix_len_[v] > 0; }
    /// Length of the suffix of P spelled by a marked node (0 when unmarked).
    Index marked_suffix_length(NodeId v) const { return suffix_len_[v]; }

    /// Deepest marked ancestor of the leaf of T[j..), or kNoNode.
    NodeId dma(Index j) const { return dma_node_[j]; }
    /// |str(dma(j))|, 0 when there is none.
    Index dma_length(Index j) const { return dma_len_[j]; }
    const std::vector<Index>& dma_lengths() const { return dma_len_; }

    /// Node spelling all of P.
    NodeId pattern_node() const { return tree_.node_of_suffix(n_ + 1); }
    /// Ranks, in the suffix array of T alone, of the text suffixes below v.
    SaInterval text_interval(NodeId v) const {
        const SaInterval r = tree_.interval(v);
        const SaInterval t{text_before_[r.lo], text_before_[r.hi + 1] - 1};
        return t.empty() ? SaInterval::none() : t;
    }

private:
    Index n_ = 0;
    Index m_ = 0;
    SuffixTree tree_;
    std::vector<Index> suffix_len_;
    std::vector<NodeId> dma_node_;
    std::vector<Index> dma_len_;
    std::vector<Index> text_before_;
};

}  // namespace ephem
