#include "ephem/pattern_trees.hpp"

#include <stdexcept>
#include <string>

#include "ephem/suffix_array.hpp"
#include "ephem/suffix_tree.hpp"

namespace ephem {
namespace {

std::u32string context_key(std::span<const Letter> s) {
    return std::u32string(s.begin(), s.end());
}

void check_nested(SaInterval child, SaInterval parent, Index child_id) {
    if (child.empty()) return;
    if (parent.empty() || child.lo < parent.lo || child.hi > parent.hi) {
        throw std::invalid_argument("decoration of suffix " + std::to_string(child_id) +
                                    " is not nested in its parent's");
    }
}

// Gap-emitting walk shared by TREE(P) and the groups. Members are entered
// in lexicographic order; `open` holds the decorated members on the current
// root path together with the first rank not yet claimed below them.
struct Decomposer {
    struct Open {
        Index node;
        Index cursor;
    };
    std::vector<Open> open;
    std::vector<IntervalEntry> out;

    void emit(Index s, Index e, Index label) {
        if (s <= e) out.push_back({s, e, label});
    }
    void enter(Index node, SaInterval d, SaInterval parent_d) {
        if (!open.empty()) {
            check_nested(d, parent_d, node);
            emit(open.back().cursor, d.lo - 1, open.back().node);
            open.back().cursor = d.hi + 1;
        }
        open.push_back({node, d.lo});
    }
    void leave(SaInterval d) {
        emit(open.back().cursor, d.hi, open.back().node);
        open.pop_back();
    }
};

}  // namespace

SuffixPrefixTree::SuffixPrefixTree(std::span<const Letter> pattern, std::vector<SaInterval> decoration)
    : m_(static_cast<Index>(pattern.size())), decoration_(std::move(decoration)) {
    if (m_ == 0) throw std::invalid_argument("TREE(P) of an empty pattern");
    if (static_cast<Index>(decoration_.size()) != m_) {
        throw std::invalid_argument("TREE(P) needs one decoration per suffix");
    }
    std::vector<Letter> ranked;
    rank_reduce(pattern, ranked);
    const auto sa = build_suffix_array(ranked);
    const auto isa = invert_permutation(sa);
    const auto lcp = build_lcp(ranked, sa, isa);
    const SuffixTree st(ranked, sa, isa, lcp, {.suffix_links = false, .child_index = false});

    // terminal nodes of ST(P), reached in DFS order, are the TREE(P) nodes;
    // the nearest terminal ancestor is the parent
    parent_.assign(m_ + 1, -1);
    preorder_.reserve(m_);
    std::vector<Index> terminal_path{m_};
    std::vector<std::pair<NodeId, bool>> todo{{SuffixTree::root(), false}};
    while (!todo.empty()) {
        auto [v, leaving] = todo.back();
        todo.pop_back();
        if (leaving) {
            terminal_path.pop_back();
            continue;
        }
        if (st.is_terminal(v)) {
            const Index i = st.pos(v);
            parent_[i] = terminal_path.back();
            preorder_.push_back(i);
            terminal_path.push_back(i);
            todo.emplace_back(v, true);
        }
        const auto kids = st.children(v);
        for (auto it = kids.rbegin(); it != kids.rend(); ++it) todo.emplace_back(*it, false);
    }

    child_begin_.assign(m_ + 2, 0);
    for (Index i : preorder_) ++child_begin_[parent_[i] + 1];
    for (Index i = 0; i <= m_; ++i) child_begin_[i + 1] += child_begin_[i];
    child_list_.resize(m_);
    std::vector<std::size_t> fill(child_begin_.begin(), child_begin_.end() - 1);
    for (Index i : preorder_) child_list_[fill[parent_[i]]++] = i;

    for (Index i : preorder_) {
        if (decoration_[i].empty()) continue;
        const Index p = parent_[i];
        if (p != m_ && decoration_[p].empty()) {
            throw std::logic_error("suffix " + std::to_string(i) +
                                   " occurs in the text but its prefix suffix " +
                                   std::to_string(p) + " does not");
        }
    }
}

std::vector<IntervalEntry> decompose_disjoint(const SuffixPrefixTree& tree) {
    Decomposer d;
    std::vector<Index> path;  // members on the root path, decorated or not
    for (Index i : tree.preorder()) {
        while (!path.empty() && path.back() != tree.parent(i)) {
            if (!tree.decoration(path.back()).empty()) d.leave(tree.decoration(path.back()));
            path.pop_back();
        }
        path.push_back(i);
        const SaInterval di = tree.decoration(i);
        if (di.empty()) continue;
        const SaInterval dp = d.open.empty() ? SaInterval::none() : tree.decoration(d.open.back().node);
        d.enter(i, di, dp);
    }
    while (!path.empty()) {
        if (!tree.decoration(path.back()).empty()) d.leave(tree.decoration(path.back()));
        path.pop_back();
    }
    return std::move(d.out);
}

ContextGroups::ContextGroups(const SuffixPrefixTree& tree, std::span<const Letter> pattern,
                             Index max_len, Index universe)
    : max_len_(max_len) {
    if (max_len < 1) throw std::invalid_argument("context length bound must be at least 1");
    const Index m = tree.pattern_length();

    // group id of the context of length L ending before i, for i in [L, m)
    std::vector<std::vector<std::size_t>> group_of(static_cast<std::size_t>(max_len) + 1);
    for (Index len = 1; len <= std::min(max_len, m - 1); ++len) {
        auto& g = group_of[len];
        g.assign(m, 0);
        for (Index i = len; i < m; ++i) {
            auto [it, fresh] = ids_.try_emplace(context_key(pattern.subspan(i - len, len)), ids_.size());
            g[i] = it->second;
        }
    }
    std::vector<Decomposer> groups(ids_.size());

    // one walk over TREE(P); entering a decorated node enters it in each
    // of its groups, and leaving it leaves them
    auto groups_of = [&](Index i, auto&& f) {
        for (Index len = 1; len <= std::min(max_len, i); ++len) f(group_of[len][i]);
    };
    std::vector<Index> path;
    auto pop = [&] {
        const Index v = path.back();
        path.pop_back();
        const SaInterval dv = tree.decoration(v);
        if (dv.empty()) return;
        groups_of(v, [&](std::size_t g) { groups[g].leave(dv); });
    };
    for (Index i : tree.preorder()) {
        while (!path.empty() && path.back() != tree.parent(i)) pop();
        path.push_back(i);
        const SaInterval di = tree.decoration(i);
        if (di.empty()) continue;
        groups_of(i, [&](std::size_t g) {
            auto& d = groups[g];
            const SaInterval dp = d.open.empty() ? SaInterval::none() : tree.decoration(d.open.back().node);
            d.enter(i, di, dp);
        });
    }
    while (!path.empty()) pop();

    sets_.reserve(groups.size());
    for (auto& d : groups) sets_.emplace_back(std::move(d.out), universe);
}

const PredSet* ContextGroups::find(std::span<const Letter> context) const {
    if (context.empty() || static_cast<Index>(context.size()) > max_len_) return nullptr;
    auto it = ids_.find(context_key(context));
    return it == ids_.end() ? nullptr : &sets_[it->second];
}

std::vector<std::pair<std::vector<Letter>, const PredSet*>> ContextGroups::groups() const {
    std::vector<std::pair<std::vector<Letter>, const PredSet*>> out;
    out.reserve(ids_.size());
    for (const auto& [key, id] : ids_) {
        out.emplace_back(std::vector<Letter>(key.begin(), key.end()), &sets_[id]);
    }
    return out;
}

}  // namespace ephem
