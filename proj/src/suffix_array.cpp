#include "ephem/suffix_array.hpp"

#include <cstdint>

namespace ephem {
namespace {

// SA-IS over s[0..n) with alphabet [0, k); s[n-1] == 0 is a unique sentinel.
std::vector<std::int32_t> sa_is(const std::vector<std::int32_t>& s, std::int32_t k) {
    const auto n = static_cast<std::int32_t>(s.size());
    std::vector<std::int32_t> sa(static_cast<std::size_t>(n), -1);
    if (n == 1) {
        sa[0] = 0;
        return sa;
    }

    std::vector<bool> stype(static_cast<std::size_t>(n));
    stype[n - 1] = true;
    for (std::int32_t i = n - 2; i >= 0; --i) {
        stype[i] = s[i] < s[i + 1] || (s[i] == s[i + 1] && stype[i + 1]);
    }
    auto is_lms = [&](std::int32_t i) { return i > 0 && stype[i] && !stype[i - 1]; };

    std::vector<std::int32_t> bucket_size(static_cast<std::size_t>(k), 0);
    for (auto c : s) ++bucket_size[c];
    std::vector<std::int32_t> bucket(static_cast<std::size_t>(k));
    auto heads = [&] {
        std::int32_t sum = 0;
        for (std::int32_t c = 0; c < k; ++c) {
            bucket[c] = sum;
            sum += bucket_size[c];
        }
    };
    auto tails = [&] {
        std::int32_t sum = 0;
        for (std::int32_t c = 0; c < k; ++c) {
            sum += bucket_size[c];
            bucket[c] = sum;
        }
    };

    auto induce = [&](const std::vector<std::int32_t>& lms_sorted) {
        std::fill(sa.begin(), sa.end(), -1);
        tails();
        for (auto it = lms_sorted.rbegin(); it != lms_sorted.rend(); ++it) {
            sa[--bucket[s[*it]]] = *it;
        }
        heads();
        for (std::int32_t i = 0; i < n; ++i) {
            const std::int32_t j = sa[i] - 1;
            if (sa[i] > 0 && !stype[j]) sa[bucket[s[j]]++] = j;
        }
        tails();
        for (std::int32_t i = n - 1; i >= 0; --i) {
            const std::int32_t j = sa[i] - 1;
            if (sa[i] > 0 && stype[j]) sa[--bucket[s[j]]] = j;
        }
    };

    std::vector<std::int32_t> lms;
    for (std::int32_t i = 1; i < n; ++i) {
        if (is_lms(i)) lms.push_back(i);
    }
    induce(lms);

    auto lms_equal = [&](std::int32_t a, std::int32_t b) {
        for (std::int32_t d = 0;; ++d) {
            if (s[a + d] != s[b + d] || stype[a + d] != stype[b + d]) return false;
            const bool a_end = d > 0 && is_lms(a + d);
            const bool b_end = d > 0 && is_lms(b + d);
            if (a_end && b_end) return true;
            if (a_end != b_end) return false;
        }
    };

    std::vector<std::int32_t> name_of(static_cast<std::size_t>(n), -1);
    std::int32_t names = 0;
    std::int32_t prev = -1;
    for (std::int32_t i = 0; i < n; ++i) {
        const std::int32_t x = sa[i];
        if (!is_lms(x)) continue;
        if (prev < 0 || !lms_equal(prev, x)) ++names;
        name_of[x] = names - 1;
        prev = x;
    }

    std::vector<std::int32_t> reduced;
    reduced.reserve(lms.size());
    for (auto x : lms) reduced.push_back(name_of[x]);

    std::vector<std::int32_t> reduced_sa;
    if (names < static_cast<std::int32_t>(lms.size())) {
        reduced_sa = sa_is(reduced, names);
    } else {
        reduced_sa.resize(reduced.size());
        for (std::size_t i = 0; i < reduced.size(); ++i) reduced_sa[reduced[i]] = static_cast<std::int32_t>(i);
    }

    std::vector<std::int32_t> lms_sorted(lms.size());
    for (std::size_t i = 0; i < lms.size(); ++i) lms_sorted[i] = lms[reduced_sa[i]];
    induce(lms_sorted);
    return sa;
}

}  // namespace

std::vector<Index> build_suffix_array(std::span<const Letter> s) {
    std::vector<Letter> ranked;
    const Letter distinct = rank_reduce(s, ranked);
    std::vector<std::int32_t> with_sentinel(s.size() + 1);
    for (std::size_t i = 0; i < s.size(); ++i) with_sentinel[i] = static_cast<std::int32_t>(ranked[i]) + 1;
    with_sentinel.back() = 0;
    const auto full = sa_is(with_sentinel, static_cast<std::int32_t>(distinct) + 1);
    // full[0] is the sentinel suffix
    return std::vector<Index>(full.begin() + 1, full.end());
}

std::vector<Index> invert_permutation(const std::vector<Index>& sa) {
    std::vector<Index> isa(sa.size());
    for (std::size_t k = 0; k < sa.size(); ++k) isa[static_cast<std::size_t>(sa[k])] = static_cast<Index>(k);
    return isa;
}

std::vector<Index> build_lcp(std::span<const Letter> s, const std::vector<Index>& sa,
                             const std::vector<Index>& isa) {
    const auto n = static_cast<Index>(s.size());
    std::vector<Index> lcp(s.size(), 0);
    Index h = 0;
    for (Index i = 0; i < n; ++i) {
        const Index rank = isa[static_cast<std::size_t>(i)];
        if (rank == 0) {
            h = 0;
            continue;
        }
        const Index j = sa[static_cast<std::size_t>(rank - 1)];
        while (i + h < n && j + h < n && s[static_cast<std::size_t>(i + h)] == s[static_cast<std::size_t>(j + h)]) ++h;
        lcp[static_cast<std::size_t>(rank)] = h;
        if (h > 0) --h;
    }
    return lcp;
}

}  // namespace ephem
