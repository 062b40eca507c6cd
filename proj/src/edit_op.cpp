#include "ephem/edit_op.hpp"

#include <stdexcept>

namespace ephem {

std::string to_string(const EditOp& op) {
    std::string out;
    switch (op.kind) {
        case EditOp::Kind::Insert: out = "Insert(" + std::to_string(op.p); break;
        case EditOp::Kind::Delete: return "Delete(" + std::to_string(op.q) + "," + std::to_string(op.p) + ")";
        case EditOp::Kind::Substitute: out = "Substitute(" + std::to_string(op.p); break;
    }
    out += ",[";
    for (std::size_t k = 0; k < op.s.size(); ++k) {
        if (k) out += ',';
        out += std::to_string(op.s[k]);
    }
    return out + "])";
}

void validate_edit(const EditOp& op, Index n, std::uint64_t sigma, Index max_block) {
    auto fail = [&](const char* why) {
        throw std::invalid_argument(to_string(op) + ": " + why + " (n=" + std::to_string(n) + ")");
    };
    if (op.kind == EditOp::Kind::Delete) {
        if (op.q < 0 || op.q > op.p || op.p >= n) fail("need 0 <= q <= p < n");
        return;
    }
    const auto len = static_cast<Index>(op.s.size());
    if (len < 1) fail("empty block");
    if (len > max_block) fail("block longer than the bound");
    for (Letter c : op.s) {
        if (c >= sigma) fail("letter outside the alphabet");
    }
    if (op.kind == EditOp::Kind::Insert) {
        if (op.p < -1 || op.p > n - 1) fail("need -1 <= p <= n-1");
    } else {
        if (op.p < 0 || op.p > n - len) fail("need 0 <= p <= n-|S|");
    }
}

EditRegions regions_of(const EditOp& op) {
    const auto len = static_cast<Index>(op.s.size());
    switch (op.kind) {
        case EditOp::Kind::Insert: return {op.p + 1, len, op.p + 1};
        case EditOp::Kind::Delete: return {op.q, 0, op.p + 1};
        case EditOp::Kind::Substitute: return {op.p, len, op.p + len};
    }
    return {};
}

}  // namespace ephem
