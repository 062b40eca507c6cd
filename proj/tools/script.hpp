#pragma once

#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ephem/edit_op.hpp"

namespace ephem::cli {

struct ScriptError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ScriptLine {
    Index line_no = 0;
    EditOp op;
};

/*
 * One edit per line:
 *   I <p> <S>    insert S after position p (p = -1 prepends)
 *   D <q> <p>    delete T[q..p]
 *   X <p> <S>    substitute T[p..p+|S|) by S
 * In byte mode S is the rest of the line, taken literally. In token mode S
 * is a comma-separated list of integers. Blank lines and lines starting
 * with '#' are skipped. Throws ScriptError naming the line.
 */
std::vector<ScriptLine> parse_script(std::istream& in, bool tokens);

/// Whitespace-separated decimal letters.
std::vector<Letter> parse_tokens(std::istream& in, const std::string& what);

}  // namespace ephem::cli
