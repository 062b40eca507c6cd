#pragma once

#include <vector>

#include "ephem/edit_op.hpp"
#include "ephem/text.hpp"

// Brute-force ground truth. Deliberately quadratic and self-contained.
namespace ephem::oracle {

/// T with op applied. Throws std::invalid_argument on an invalid op.
std::vector<Letter> apply_edit(const std::vector<Letter>& text, const EditOp& op);

/// Every start of P in T, ascending, by direct comparison.
std::vector<Index> naive_search(std::span<const Letter> text, std::span<const Letter> pattern);

/// Offsets of P in P[0..a) P[m-b..m), ascending.
std::vector<Index> prefsuf(std::span<const Letter> pattern, Index a, Index b);

struct Result {
    std::vector<Letter> edited;
    std::vector<Index> occurrences;
};

Result occurrences_after(const std::vector<Letter>& text, std::span<const Letter> pattern, const EditOp& op);

}  // namespace ephem::oracle
