#pragma once

#include <string>
#include <vector>

#include "ephem/text.hpp"

namespace ephem {

/*
 * One ephemeral edit of a text T of length n.
 *   Insert(p, S):     S goes after T[p]; p = -1 prepends.
 *   Delete(q, p):     removes T[q..p].
 *   Substitute(p, S): overwrites T[p..p+|S|).
 */
struct EditOp {
    enum class Kind { Insert, Delete, Substitute };

    Kind kind = Kind::Insert;
    Index p = 0;
    Index q = 0;  // Delete only
    std::vector<Letter> s;

    static EditOp insert(Index p, std::vector<Letter> s) { return {Kind::Insert, p, 0, std::move(s)}; }
    static EditOp erase(Index q, Index p) { return {Kind::Delete, p, q, {}}; }
    static EditOp substitute(Index p, std::vector<Letter> s) {
        return {Kind::Substitute, p, 0, std::move(s)};
    }

    friend bool operator==(const EditOp&, const EditOp&) = default;
};

std::string to_string(const EditOp& op);

/// Throws std::invalid_argument unless op is a valid edit of a text of
/// length n over [0, sigma) with |S| <= max_block.
void validate_edit(const EditOp& op, Index n, std::uint64_t sigma, Index max_block);

/// The three regions of the edited text: T[0..left_end), the block S
/// (empty for Delete), then T[right_start..n).
struct EditRegions {
    Index left_end = 0;
    Index block = 0;
    Index right_start = 0;

    Index edited_length(Index n) const { return left_end + block + (n - right_start); }
    /// Shift from T to T' coordinates for positions >= right_start.
    Index right_shift() const { return left_end + block - right_start; }
};

EditRegions regions_of(const EditOp& op);

}  // namespace ephem
