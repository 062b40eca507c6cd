#include "ephem/sma.hpp"

#include <stdexcept>

namespace ephem {

Sma::Sma(std::span<const Letter> x) : x_(x.begin(), x.end()) {
    const Index len = length();
    if (len == 0) throw std::invalid_argument("automaton of an empty string");

    // out[k]: stored transitions of state k, copied from its fallback state
    std::vector<std::vector<std::pair<Letter, std::uint32_t>>> out(len + 1);
    out[0].emplace_back(x_[0], 1);
    Index fallback = 0;
    for (Index k = 1; k <= len; ++k) {
        for (auto [c, to] : out[fallback]) {
            if (k == len || c != x_[k]) out[k].emplace_back(c, to);
        }
        if (k < len) {
            out[k].emplace_back(x_[k], static_cast<std::uint32_t>(k + 1));
            // fallback of k+1 is where the fallback of k goes on x[k]
            Index f = 0;
            for (auto [c, to] : out[fallback]) {
                if (c == x_[k]) f = to;
            }
            fallback = f;
        }
    }
    std::size_t total = 0;
    for (const auto& o : out) total += o.size();
    next_.reserve(total);
    for (Index k = 0; k <= len; ++k) {
        for (auto [c, to] : out[k]) next_.emplace(key(k, c), to);
    }
}

Index Sma::delta(Index state, Letter c) const {
    auto it = next_.find(key(state, c));
    return it == next_.end() ? 0 : it->second;
}

}  // namespace ephem
