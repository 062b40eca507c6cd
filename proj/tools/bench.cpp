#include "bench.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <stdexcept>

#include "ephem/edit_matcher.hpp"
#include "ephem/ephemeral_index.hpp"
#include "ephem/oracle.hpp"

namespace ephem::cli {
namespace {

using Clock = std::chrono::steady_clock;

double elapsed_us(Clock::time_point from) {
    return std::chrono::duration<double, std::micro>(Clock::now() - from).count();
}

Latency summarize(std::vector<double> us) {
    Latency l;
    l.samples = static_cast<Index>(us.size());
    if (us.empty()) return l;
    std::sort(us.begin(), us.end());
    auto at = [&](double q) { return us[std::min(us.size() - 1, static_cast<std::size_t>(q * us.size()))]; };
    l.p50 = at(0.5);
    l.p90 = at(0.9);
    l.p99 = at(0.99);
    double total = 0;
    for (double x : us) total += x;
    l.mean = total / us.size();
    return l;
}

EditOp random_op(Engine engine, std::mt19937_64& rng, Index n, Letter sigma, Index epsilon) {
    auto pick = [&](Index lo, Index hi) { return std::uniform_int_distribution<Index>(lo, hi)(rng); };
    auto block = [&](Index len) {
        std::vector<Letter> s(len);
        for (auto& c : s) c = static_cast<Letter>(pick(0, sigma - 1));
        return s;
    };
    const Index len = engine == Engine::Index ? pick(1, epsilon) : 1;
    const Index kind = engine == Engine::BlockDelete ? 1 : pick(0, 2);
    if (kind == 1) {
        const Index q = pick(0, n - 1);
        const Index span = engine == Engine::SingleEdit ? 0 : pick(0, 63);
        return EditOp::erase(q, std::min(n - 1, q + span));
    }
    if (kind == 0) return EditOp::insert(pick(-1, n - 1), block(len));
    return EditOp::substitute(pick(0, n - len), block(len));
}

}  // namespace

Engine parse_engine(const std::string& mode) {
    if (mode == "index") return Engine::Index;
    if (mode == "pm-del") return Engine::BlockDelete;
    if (mode == "pm-edit") return Engine::SingleEdit;
    throw std::invalid_argument("unknown mode '" + mode + "' (expected index, pm-del or pm-edit)");
}

std::string engine_name(Engine e) {
    switch (e) {
        case Engine::Index: return "index";
        case Engine::BlockDelete: return "pm-del";
        case Engine::SingleEdit: return "pm-edit";
    }
    return "?";
}

BenchResult run_bench(const BenchConfig& cfg) {
    if (cfg.n < 1 || cfg.m < 1 || cfg.m > cfg.n || cfg.sigma < 1) {
        throw std::invalid_argument("bench needs 1 <= m <= n and sigma >= 1");
    }
    BenchResult res;
    res.config = cfg;
    std::mt19937_64 rng(cfg.seed);
    std::vector<Letter> t(cfg.n);
    for (auto& c : t) c = static_cast<Letter>(std::uniform_int_distribution<Index>(0, cfg.sigma - 1)(rng));
    const Index cut = std::uniform_int_distribution<Index>(0, cfg.n - cfg.m)(rng);
    const std::vector<Letter> p(t.begin() + cut, t.begin() + cut + cfg.m);
    const Text text(t, cfg.sigma), pattern(p, cfg.sigma);

    std::vector<EditOp> ops;
    ops.reserve(cfg.ops);
    for (Index k = 0; k < cfg.ops; ++k) ops.push_back(random_op(cfg.engine, rng, cfg.n, cfg.sigma, cfg.epsilon));

    std::vector<double> us;
    us.reserve(cfg.ops);
    std::vector<Index> out;
    auto measure = [&](auto&& query) {
        for (const auto& op : ops) {
            out.clear();
            const auto start = Clock::now();
            query(op, out);
            us.push_back(elapsed_us(start));
            res.occurrences += static_cast<Index>(out.size());
        }
    };

    auto start = Clock::now();
    switch (cfg.engine) {
        case Engine::Index: {
            const EphemeralTextIndex eti(text);
            res.text_prep_ms = elapsed_us(start) / 1000;
            start = Clock::now();
            const PatternHandle ph(eti, pattern, cfg.epsilon);
            res.pattern_prep_ms = elapsed_us(start) / 1000;
            measure([&](const EditOp& op, std::vector<Index>& o) { ph.occurrences_after_unsorted(op, o); });
            break;
        }
        case Engine::BlockDelete: {
            const BlockDeleteMatcher bd(text, pattern);
            res.text_prep_ms = elapsed_us(start) / 1000;
            measure([&](const EditOp& op, std::vector<Index>& o) {
                bd.occurrences_after_delete_unsorted(op.q, op.p, o);
            });
            break;
        }
        case Engine::SingleEdit: {
            const EditMatcher em(text, pattern);
            res.text_prep_ms = elapsed_us(start) / 1000;
            measure([&](const EditOp& op, std::vector<Index>& o) { em.occurrences_after_edit_unsorted(op, o); });
            break;
        }
    }
    res.engine = summarize(std::move(us));

    std::vector<double> base;
    volatile std::size_t sink = 0;
    for (Index k = 0; k < std::min(cfg.baseline_ops, cfg.ops); ++k) {
        const auto begin = Clock::now();
        const auto edited = oracle::apply_edit(t, ops[k]);
        const auto found = oracle::naive_search(edited, p);
        base.push_back(elapsed_us(begin));
        sink = sink + found.size();
    }
    res.baseline = summarize(std::move(base));
    return res;
}

}  // namespace ephem::cli
