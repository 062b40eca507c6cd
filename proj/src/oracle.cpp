#include "ephem/oracle.hpp"

#include <stdexcept>

namespace ephem::oracle {

std::vector<Letter> apply_edit(const std::vector<Letter>& text, const EditOp& op) {
    const auto n = static_cast<Index>(text.size());
    const auto len = static_cast<Index>(op.s.size());
    std::vector<Letter> out;
    switch (op.kind) {
        case EditOp::Kind::Insert:
            if (op.p < -1 || op.p >= n || len == 0) throw std::invalid_argument("bad insert");
            out.assign(text.begin(), text.begin() + (op.p + 1));
            out.insert(out.end(), op.s.begin(), op.s.end());
            out.insert(out.end(), text.begin() + (op.p + 1), text.end());
            break;
        case EditOp::Kind::Delete:
            if (op.q < 0 || op.q > op.p || op.p >= n) throw std::invalid_argument("bad delete");
            out.assign(text.begin(), text.begin() + op.q);
            out.insert(out.end(), text.begin() + (op.p + 1), text.end());
            break;
        case EditOp::Kind::Substitute:
            if (op.p < 0 || len == 0 || op.p + len > n) throw std::invalid_argument("bad substitute");
            out = text;
            for (Index k = 0; k < len; ++k) out[op.p + k] = op.s[k];
            break;
    }
    return out;
}

std::vector<Index> naive_search(std::span<const Letter> text, std::span<const Letter> pattern) {
    std::vector<Index> out;
    const auto n = static_cast<Index>(text.size());
    const auto m = static_cast<Index>(pattern.size());
    if (m == 0) return out;
    for (Index t = 0; t + m <= n; ++t) {
        Index k = 0;
        while (k < m && text[t + k] == pattern[k]) ++k;
        if (k == m) out.push_back(t);
    }
    return out;
}

std::vector<Index> prefsuf(std::span<const Letter> pattern, Index a, Index b) {
    const auto m = static_cast<Index>(pattern.size());
    if (a < 0 || a > m || b < 0 || b > m) throw std::out_of_range("prefsuf arguments");
    std::vector<Letter> x(pattern.begin(), pattern.begin() + a);
    x.insert(x.end(), pattern.end() - b, pattern.end());
    return naive_search(x, pattern);
}

Result occurrences_after(const std::vector<Letter>& text, std::span<const Letter> pattern, const EditOp& op) {
    Result r;
    r.edited = apply_edit(text, op);
    r.occurrences = naive_search(r.edited, pattern);
    return r;
}

}  // namespace ephem::oracle
