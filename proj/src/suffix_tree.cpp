#include "ephem/suffix_tree.hpp"

#include <algorithm>
#include <stdexcept>

#include "ephem/rmq.hpp"
#include "ephem/suffix_array.hpp"

namespace ephem {
namespace {

std::uint64_t edge_key(NodeId v, Letter c) {
    return (static_cast<std::uint64_t>(v) << 32) | c;
}

}  // namespace

NodeId SuffixTree::add_node(Index depth, Index lo, NodeId parent) {
    depth_.push_back(depth);
    parent_.push_back(parent);
    lo_.push_back(lo);
    hi_.push_back(lo);
    pos_.push_back(0);
    terminal_.push_back(false);
    return static_cast<NodeId>(depth_.size() - 1);
}

SuffixTree::SuffixTree(std::span<const Letter> s, const std::vector<Index>& sa,
                       const std::vector<Index>& isa, const std::vector<Index>& lcp,
                       Options opts)
    : str_(s.begin(), s.end()) {
    const Index n = length();
    if (n == 0) throw std::invalid_argument("suffix tree of an empty string");
    const std::size_t reserve = 2 * static_cast<std::size_t>(n) + 1;
    depth_.reserve(reserve);
    parent_.reserve(reserve);
    lo_.reserve(reserve);
    hi_.reserve(reserve);
    pos_.reserve(reserve);
    node_of_suffix_.assign(n, kNoNode);

    // owner[k] is the lowest common ancestor of the leaves of ranks k-1 and k
    std::vector<NodeId> owner(n, kNoNode);

    add_node(0, 0, kNoNode);
    std::vector<NodeId> stack{root()};
    for (Index k = 0; k < n; ++k) {
        const Index l = k == 0 ? 0 : lcp[k];
        NodeId last = kNoNode;
        while (depth_[stack.back()] > l) {
            last = stack.back();
            stack.pop_back();
            hi_[last] = k - 1;
        }
        if (depth_[stack.back()] < l) {
            const NodeId v = add_node(l, lo_[last], stack.back());
            parent_[last] = v;
            stack.push_back(v);
        }
        if (k > 0) owner[k] = stack.back();
        const NodeId leaf = add_node(n - sa[k], k, stack.back());
        terminal_[leaf] = true;
        node_of_suffix_[sa[k]] = leaf;
        stack.push_back(leaf);
    }
    for (NodeId v : stack) hi_[v] = n - 1;

    const std::size_t count = node_count();
    for (std::size_t v = 0; v < count; ++v) pos_[v] = sa[lo_[v]];

    child_begin_.assign(count + 1, 0);
    for (std::size_t v = 1; v < count; ++v) ++child_begin_[parent_[v] + 1];
    for (std::size_t v = 0; v < count; ++v) child_begin_[v + 1] += child_begin_[v];
    child_list_.resize(count - 1);
    {
        std::vector<std::size_t> fill(child_begin_.begin(), child_begin_.end() - 1);
        for (std::size_t v = 1; v < count; ++v) child_list_[fill[parent_[v]]++] = static_cast<NodeId>(v);
    }
    // lex order of children equals SA order of their intervals
    for (std::size_t v = 0; v < count; ++v) {
        std::sort(child_list_.begin() + child_begin_[v], child_list_.begin() + child_begin_[v + 1],
                  [&](NodeId a, NodeId b) { return lo_[a] < lo_[b]; });
    }

    if (opts.child_index) {
        edges_.reserve(count);
        for (std::size_t v = 1; v < count; ++v) {
            edges_.emplace(edge_key(parent_[v], first_letter(static_cast<NodeId>(v))), static_cast<NodeId>(v));
        }
    }

    if (opts.suffix_links) {
        RangeArgMin lcp_min(lcp);
        slink_.assign(count, root());
        for (std::size_t v = 1; v < count; ++v) {
            if (terminal_[v]) {
                const Index i = pos_[v];
                slink_[v] = i + 1 < n ? node_of_suffix_[i + 1] : root();
                continue;
            }
            // branching, not terminal: LCA of the shifted extreme suffixes
            const Index a = isa[sa[lo_[v]] + 1];
            const Index b = isa[sa[hi_[v]] + 1];
            slink_[v] = owner[lcp_min.query(std::min(a, b) + 1, std::max(a, b))];
        }
    }
}

NodeId SuffixTree::child(NodeId v, Letter c) const {
    auto it = edges_.find(edge_key(v, c));
    return it == edges_.end() ? kNoNode : it->second;
}

SaInterval locate(const SuffixTree& st, std::span<const Letter> x) {
    NodeId v = SuffixTree::root();
    Index matched = 0;
    const auto m = static_cast<Index>(x.size());
    while (matched < m) {
        const NodeId y = st.child(v, x[matched]);
        if (y == kNoNode) return SaInterval::none();
        const Index edge_end = std::min(st.depth(y), m);
        for (Index d = matched + 1; d < edge_end; ++d) {
            if (st.letter(st.pos(y) + d) != x[d]) return SaInterval::none();
        }
        matched = edge_end;
        v = y;
    }
    return st.interval(v);
}

MatchingStats matching_statistics(const SuffixTree& st, std::span<const Letter> pattern) {
    const auto m = static_cast<Index>(pattern.size());
    MatchingStats ms;
    ms.ms_len.assign(m, 0);
    ms.suf_interval.assign(m, SaInterval::none());

    // locus of P[i..i+len): x is the deepest explicit node with depth(x) <= len
    NodeId x = SuffixTree::root();
    Index len = 0;
    for (Index i = 0; i < m; ++i) {
        while (i + len < m) {
            const Letter c = pattern[i + len];
            NodeId y;
            if (len == st.depth(x)) {
                y = st.child(x, c);
                if (y == kNoNode) break;
            } else {
                y = st.child(x, pattern[i + st.depth(x)]);
                if (st.letter(st.pos(y) + len) != c) break;
            }
            ++len;
            if (len == st.depth(y)) x = y;
        }
        ms.ms_len[i] = len;
        if (len == m - i) {
            const NodeId locus = len == st.depth(x) ? x : st.child(x, pattern[i + st.depth(x)]);
            ms.suf_interval[i] = st.interval(locus);
        }
        if (len == 0) continue;

        x = x == SuffixTree::root() ? x : st.slink(x);
        --len;
        // skip/count down to depth len along P[i+1..)
        while (st.depth(x) < len) {
            const NodeId y = st.child(x, pattern[i + 1 + st.depth(x)]);
            if (st.depth(y) > len) break;
            x = y;
        }
    }
    return ms;
}

MarkedGst::MarkedGst(const Text& text, const Text& pattern)
    : n_(text.size()), m_(pattern.size()) {
    if (n_ == 0 || m_ == 0) throw std::invalid_argument("marked GST needs nonempty T and P");

    // letters shifted by one so that # = 0 sorts before every real letter
    std::vector<Letter> s;
    s.reserve(n_ + 1 + m_);
    for (Letter c : text.letters()) s.push_back(c + 1);
    s.push_back(0);
    for (Letter c : pattern.letters()) s.push_back(c + 1);

    const auto sa = build_suffix_array(s);
    const auto isa = invert_permutation(sa);
    const auto lcp = build_lcp(s, sa, isa);
    tree_ = SuffixTree(s, sa, isa, lcp, {.suffix_links = false, .child_index = false});

    // # is unique and smallest, so text suffixes keep their relative order
    text_before_.assign(sa.size() + 1, 0);
    for (std::size_t k = 0; k < sa.size(); ++k) text_before_[k + 1] = text_before_[k] + (sa[k] < n_);

    suffix_len_.assign(tree_.node_count(), 0);
    for (Index i = 0; i < m_; ++i) {
        suffix_len_[tree_.node_of_suffix(n_ + 1 + i)] = m_ - i;
    }

    dma_node_.assign(n_, kNoNode);
    dma_len_.assign(n_, 0);

    // one DFS; `active` holds the marked nodes on the current root path
    std::vector<NodeId> active;
    std::vector<std::pair<NodeId, bool>> todo{{SuffixTree::root(), false}};
    while (!todo.empty()) {
        auto [v, leaving] = todo.back();
        todo.pop_back();
        if (leaving) {
            active.pop_back();
            continue;
        }
        const bool marked = is_marked(v);
        if (marked) {
            active.push_back(v);
            todo.emplace_back(v, true);
        }
        if (tree_.is_terminal(v)) {
            const Index j = tree_.pos(v);
            if (j < n_) {
                // str(v) contains #, so v itself is never marked
                const NodeId u = active.empty() ? kNoNode : active.back();
                dma_node_[j] = u;
                dma_len_[j] = u == kNoNode ? 0 : suffix_len_[u];
            }
        }
        for (NodeId c : tree_.children(v)) todo.emplace_back(c, false);
    }
}

}  // namespace ephem
