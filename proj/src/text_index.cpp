#include "ephem/text_index.hpp"

#include <stdexcept>
#include <utility>

#include "ephem/suffix_array.hpp"

namespace ephem {

TextIndex::TextIndex(Text text) : text_(std::move(text)) {
    if (text_.empty()) throw std::invalid_argument("cannot index an empty text");
    require_polynomial_alphabet(text_);
    sa_ = build_suffix_array(text_.letters());
    isa_ = invert_permutation(sa_);
    lcp_ = build_lcp(text_.letters(), sa_, isa_);
    rmq_min_ = RangeArgMin(sa_);
    rmq_max_ = RangeArgMax(sa_);
}

void TextIndex::report_starts(SaInterval r, Index lo_pos, Index hi_pos,
                              std::vector<Index>& out) const {
    if (r.empty() || lo_pos > hi_pos) return;
    const bool use_max = lo_pos > 0 && hi_pos >= size() - 1;

    std::vector<std::pair<Index, Index>> pending;
    pending.emplace_back(r.lo, r.hi);
    while (!pending.empty()) {
        auto [l, h] = pending.back();
        pending.pop_back();
        if (l > h) continue;
        const auto k = static_cast<Index>(use_max ? rmq_max_.query(l, h) : rmq_min_.query(l, h));
        const Index pos = sa_[k];
        if (use_max ? pos < lo_pos : pos > hi_pos) continue;
        if (lo_pos <= pos && pos <= hi_pos) out.push_back(pos);
        pending.emplace_back(l, k - 1);
        pending.emplace_back(k + 1, h);
    }
}

}  // namespace ephem
