#pragma once

#include <vector>

#include "ephem/block_delete.hpp"
#include "ephem/edit_op.hpp"
#include "ephem/sma.hpp"

namespace ephem {

/*
 * Both T and P known in advance; single-letter insert, delete and
 * substitute answered in O(Occ) time. The text position j is linked to the
 * automaton state lsp(j) of reverse(P), so reading the new letter c from
 * that state gives the longest suffix of P that is a prefix of c T[j..n).
 */
class EditMatcher {
public:
    EditMatcher(Text text, Text pattern);

    const BlockDeleteMatcher& block_delete() const { return bd_; }
    const Sma& automaton() const { return sma_; }
    /// Automaton state attached to text position j.
    Index state(Index j) const { return bd_.lsp(j); }

    struct Junction {
        Index a = 0;  // longest prefix of P ending just before the edit
        Index b = 0;  // longest suffix of P starting at the edit
    };
    /// The pieces fed to the prefix-suffix query; Insert and Substitute only.
    Junction junction(const EditOp& op) const;

    /// Sorted occurrences of P after a single-letter edit. Throws
    /// std::invalid_argument on anything else.
    std::vector<Index> occurrences_after_edit(const EditOp& op) const;
    void occurrences_after_edit_unsorted(const EditOp& op, std::vector<Index>& out) const;

private:
    BlockDeleteMatcher bd_;
    Sma sma_;
};

}  // namespace ephem
