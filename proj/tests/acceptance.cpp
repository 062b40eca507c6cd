// One line per acceptance criterion. Exit status is 0 when exactly the
// criteria named by --expect-red fail among 1-8; criterion 9 is reported
// only.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <set>
#include <string>

#include "bench.hpp"
#include "ephem/edit_matcher.hpp"
#include "ephem/ephemeral_index.hpp"
#include "ephem/oracle.hpp"
#include "support.hpp"

using namespace ephem;
using namespace testing_support;

namespace {

// pinned tolerances
constexpr double kExamplesSeconds = 1.0;
constexpr double kDifferentialSeconds = 120.0;
constexpr double kPrefSufSeconds = 60.0;
constexpr Index kDifferentialCases = 100000;
constexpr Index kDiffMaxN = 256;
constexpr Index kDiffMaxM = 32;
constexpr Index kDiffMaxEps = 4;
constexpr Index kPrefSufMaxM = 12;
constexpr Index kSmaMaxM = 64;
constexpr Letter kSmaMaxSigma = 8;
constexpr int kSmaTrials = 3000;
constexpr Index kPerfN = Index{1} << 20;
constexpr Index kPerfSmallN = Index{1} << 16;
constexpr Index kPerfOps = 10000;
constexpr double kPerfMaxSpread = 2.0;      // max/min median latency
constexpr double kBaselineMinGrowth = 8.0;  // 16x longer text, linear would give 16x
constexpr double kBaselineMaxGrowth = 32.0;

const std::vector<Letter> kDiffSigmas{2, 4, 26, 1000};

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (ok) return;
        pass = false;
        if (!detail.empty()) detail += "; ";
        detail += what;
    }
};

double seconds_since(std::chrono::steady_clock::time_point t) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

std::string show(const std::vector<Index>& v) {
    std::string s = "{";
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
    return s + "}";
}

std::string show(const std::vector<IntervalEntry>& v) {
    std::string s = "{";
    for (std::size_t k = 0; k < v.size(); ++k) {
        s += (k ? "," : "") + std::string("[") + std::to_string(v[k].s) + "," + std::to_string(v[k].e) +
             "]_" + std::to_string(v[k].i);
    }
    return s + "}";
}

const char* kT = "ananabannabanaana";

Outcome criterion1() {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    const TextIndex idx(text(kT));
    const SuffixTree st(idx);
    const std::vector<Index> sa{16, 13, 9, 4, 14, 11, 2, 0, 6, 10, 5, 15, 12, 8, 3, 1, 7};
    o.require(idx.sa() == sa, "SA " + show(idx.sa()));
    const SaInterval ban = locate(st, letters("ban"));
    o.require(ban == SaInterval{9, 10}, "ban -> [" + std::to_string(ban.lo) + "," + std::to_string(ban.hi) + "]");
    const double secs = seconds_since(start);
    o.require(secs < kExamplesSeconds, "took " + std::to_string(secs) + " s");
    return o;
}

Outcome criterion2() {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    const EphemeralTextIndex eti(text(kT));
    const PatternHandle one(eti, text("banana"), 1);
    const PatternHandle two(eti, text("banana"), 2);

    const std::vector<IntervalEntry> tree{{0, 3, 5}, {4, 6, 3}, {7, 7, 1}, {8, 8, 5}, {11, 14, 4}, {15, 15, 2}};
    o.require(one.tree_set().entries() == tree, "TREE(P) " + show(one.tree_set().entries()));

    auto group = [&](const PatternHandle& ph, const char* s) -> std::vector<IntervalEntry> {
        const PredSet* set = ph.groups().find(letters(s));
        return set ? set->entries() : std::vector<IntervalEntry>{};
    };
    const std::vector<IntervalEntry> ga{{11, 14, 4}, {15, 15, 2}}, gb{{7, 7, 1}},
        gn{{0, 3, 5}, {4, 7, 3}, {8, 8, 5}};
    o.require(group(one, "a") == ga, "group a " + show(group(one, "a")));
    o.require(group(one, "b") == gb, "group b " + show(group(one, "b")));
    o.require(group(one, "n") == gn, "group n " + show(group(one, "n")));
    o.require(one.groups().group_count() == 3, "letter groups: " + std::to_string(one.groups().group_count()));

    const auto na = group(two, "na");
    const bool has = std::find(na.begin(), na.end(), IntervalEntry{11, 14, 4}) != na.end();
    o.require(has, "group na " + show(na) + " lacks [11,14]_4");

    const double secs = seconds_since(start);
    o.require(secs < kExamplesSeconds, "took " + std::to_string(secs) + " s");
    return o;
}

Outcome criterion3() {
    Outcome o;
    const EphemeralTextIndex eti(text(kT));
    const PatternHandle ph(eti, text("banana"), 2);
    const std::pair<EditOp, std::vector<Index>> cases[] = {
        {EditOp::erase(13, 13), {10}},
        {EditOp::insert(7, letters("a")), {5}},
        {EditOp::insert(-1, letters("b")), {0}},
        {EditOp::insert(11, letters("na")), {10}},
    };
    for (const auto& [op, want] : cases) {
        const auto got = ph.occurrences_after(op);
        o.require(got == want, to_string(op) + " -> " + show(got));
    }
    return o;
}

Outcome criterion4() {
    Outcome o;
    const BlockDeleteMatcher bd(text("bababbbababb"), text("ababab"));
    const auto got = bd.occurrences_after_delete(5, 6);
    o.require(got.size() == 2, "count " + std::to_string(got.size()));
    o.require(got == std::vector<Index>{1, 3}, "positions " + show(got));
    return o;
}

Outcome criterion5() {
    Outcome o;
    const EditMatcher em(text("bababbbababb"), text("ababab"));
    const EditOp op = EditOp::insert(4, letters("a"));
    const auto got = em.occurrences_after_edit(op);
    o.require(got.size() == 1, "count " + std::to_string(got.size()));
    o.require(got == std::vector<Index>{1}, "positions " + show(got));
    const auto j = em.junction(op);
    o.require(j.a == 4, "a=" + std::to_string(j.a));
    o.require(j.b == 2, "b=" + std::to_string(j.b));
    return o;
}

// Random instance: the pattern is often cut from the text and the edit
// block often made of pattern letters, so that junction occurrences are
// common.
struct Instance {
    std::vector<Letter> t, p;
    Letter sigma;
};

Instance random_instance(Gen& gen, Index round) {
    Instance x;
    x.sigma = kDiffSigmas[round % kDiffSigmas.size()];
    x.t = gen.repetitive(gen.uniform(1, kDiffMaxN), x.sigma);
    const Index m = gen.uniform(1, std::min(kDiffMaxM, gen.uniform(0, 3) ? Index(x.t.size()) : kDiffMaxM));
    if (m <= Index(x.t.size()) && gen.uniform(0, 2)) {
        const Index at = gen.uniform(0, x.t.size() - m);
        x.p.assign(x.t.begin() + at, x.t.begin() + at + m);
        if (gen.uniform(0, 3) == 0) x.p[gen.uniform(0, m - 1)] = static_cast<Letter>(gen.uniform(0, x.sigma - 1));
    } else {
        x.p = gen.repetitive(m, x.sigma);
    }
    return x;
}

std::vector<Letter> block_for(Gen& gen, const Instance& x, Index len) {
    auto s = gen.word(len, x.sigma);
    if (gen.uniform(0, 1)) {
        const Index from = gen.uniform(0, x.p.size() - 1);
        for (Index k = 0; k < len; ++k) s[k] = x.p[(from + k) % x.p.size()];
    }
    return s;
}

Outcome differential(const char* name, const std::function<void(Gen&, Index&, Index&, std::string&)>& body) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    Gen gen(std::hash<std::string>{}(name));
    Index cases = 0, nonempty = 0;
    std::string failure;
    while (cases < kDifferentialCases && failure.empty()) body(gen, cases, nonempty, failure);
    o.require(failure.empty(), std::string(name) + ": " + failure);
    o.require(cases >= kDifferentialCases, std::string(name) + " ran " + std::to_string(cases) + " cases");
    std::printf("    %-8s %lld cases, %lld with occurrences, %.1f s\n", name, static_cast<long long>(cases),
                static_cast<long long>(nonempty), seconds_since(start));
    return o;
}

Outcome criterion6() {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    Index round = 0;
    auto check = [](const std::vector<Index>& got, const std::vector<Index>& want, const EditOp& op,
                    const Instance& x, Index& cases, Index& nonempty, std::string& failure) {
        ++cases;
        nonempty += !want.empty();
        if (got != want) {
            failure = to_string(op) + " n=" + std::to_string(x.t.size()) + " m=" + std::to_string(x.p.size()) +
                      " engine " + show(got) + " oracle " + show(want);
        }
    };

    const Outcome index = differential("index", [&](Gen& gen, Index& cases, Index& nonempty, std::string& failure) {
        const Instance x = random_instance(gen, round++);
        const auto n = static_cast<Index>(x.t.size());
        const Index eps = gen.uniform(1, kDiffMaxEps);
        const EphemeralTextIndex eti(Text(x.t, x.sigma));
        const PatternHandle ph(eti, Text(x.p, x.sigma), eps);
        for (int k = 0; k < 50 && failure.empty(); ++k) {
            const Index len = gen.uniform(1, eps);
            EditOp op;
            switch (gen.uniform(0, 2)) {
                case 0: op = EditOp::insert(gen.uniform(-1, n - 1), block_for(gen, x, len)); break;
                case 1: {
                    const Index q = gen.uniform(0, n - 1);
                    op = EditOp::erase(q, std::min(n - 1, q + gen.uniform(0, gen.uniform(0, 1) ? 3 : n)));
                    break;
                }
                default:
                    if (len > n) continue;
                    op = EditOp::substitute(gen.uniform(0, n - len), block_for(gen, x, len));
            }
            check(ph.occurrences_after(op), oracle::occurrences_after(x.t, x.p, op).occurrences, op, x, cases,
                  nonempty, failure);
        }
    });
    const Outcome del = differential("pm-del", [&](Gen& gen, Index& cases, Index& nonempty, std::string& failure) {
        const Instance x = random_instance(gen, round++);
        const auto n = static_cast<Index>(x.t.size());
        const BlockDeleteMatcher bd(Text(x.t, x.sigma), Text(x.p, x.sigma));
        for (int k = 0; k < 50 && failure.empty(); ++k) {
            const Index q = gen.uniform(0, n - 1);
            const EditOp op = EditOp::erase(q, std::min(n - 1, q + gen.uniform(0, gen.uniform(0, 1) ? 3 : n)));
            check(bd.occurrences_after_delete(op.q, op.p), oracle::occurrences_after(x.t, x.p, op).occurrences, op,
                  x, cases, nonempty, failure);
        }
    });
    const Outcome edit = differential("pm-edit", [&](Gen& gen, Index& cases, Index& nonempty, std::string& failure) {
        const Instance x = random_instance(gen, round++);
        const auto n = static_cast<Index>(x.t.size());
        const EditMatcher em(Text(x.t, x.sigma), Text(x.p, x.sigma));
        for (int k = 0; k < 50 && failure.empty(); ++k) {
            EditOp op;
            switch (gen.uniform(0, 2)) {
                case 0: op = EditOp::insert(gen.uniform(-1, n - 1), block_for(gen, x, 1)); break;
                case 1: {
                    const Index at = gen.uniform(0, n - 1);
                    op = EditOp::erase(at, at);
                    break;
                }
                default: op = EditOp::substitute(gen.uniform(0, n - 1), block_for(gen, x, 1));
            }
            check(em.occurrences_after_edit(op), oracle::occurrences_after(x.t, x.p, op).occurrences, op, x, cases,
                  nonempty, failure);
        }
    });
    for (const Outcome* part : {&index, &del, &edit}) o.require(part->pass, part->detail);
    const double secs = seconds_since(start);
    o.require(secs < kDifferentialSeconds, "took " + std::to_string(secs) + " s");
    return o;
}

Outcome criterion7() {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    Index queries = 0;
    for (Index m = 1; m <= kPrefSufMaxM && o.pass; ++m) {
        for (std::uint32_t bits = 0; bits < (1u << m) && o.pass; ++bits) {
            std::vector<Letter> p(m);
            for (Index k = 0; k < m; ++k) p[k] = (bits >> k) & 1;
            const PrefSufIndex ps(p);
            for (Index a = 0; a <= m; ++a) {
                for (Index b = 0; b <= m; ++b) {
                    ++queries;
                    const auto want = oracle::prefsuf(p, a, b);
                    bool progression = true;
                    for (std::size_t k = 2; k < want.size(); ++k) {
                        progression &= want[k] - want[k - 1] == want[1] - want[0];
                    }
                    const auto got = ps.query(a, b).to_vector();
                    if (got != want || !progression) {
                        o.require(false, "m=" + std::to_string(m) + " bits=" + std::to_string(bits) + " a=" +
                                             std::to_string(a) + " b=" + std::to_string(b) + " got " + show(got) +
                                             " oracle " + show(want));
                    }
                }
            }
        }
    }
    const double secs = seconds_since(start);
    std::printf("    %lld queries, %.1f s\n", static_cast<long long>(queries), secs);
    o.require(secs < kPrefSufSeconds, "took " + std::to_string(secs) + " s");
    return o;
}

Outcome criterion8() {
    Outcome o;
    Gen gen(8);
    for (int trial = 0; trial < kSmaTrials && o.pass; ++trial) {
        const auto sigma = static_cast<Letter>(gen.uniform(1, kSmaMaxSigma));
        const auto x = gen.repetitive(gen.uniform(1, kSmaMaxM), sigma);
        const auto m = static_cast<Index>(x.size());
        const Sma sma(x);
        o.require(static_cast<Index>(sma.stored_transitions()) <= 2 * m,
                  "stored " + std::to_string(sma.stored_transitions()) + " > 2m, m=" + std::to_string(m));
        std::vector<Letter> read;
        for (Index k = 0; k <= m && o.pass; ++k) {
            for (Letter c = 0; c < sigma; ++c) {
                read.assign(x.begin(), x.begin() + k);
                read.push_back(c);
                Index want = 0;
                for (Index l = std::min(m, k + 1); l > 0; --l) {
                    if (std::equal(read.end() - l, read.end(), x.begin())) {
                        want = l;
                        break;
                    }
                }
                if (sma.delta(k, c) != want) {
                    o.require(false, "trial " + std::to_string(trial) + " delta(" + std::to_string(k) + "," +
                                         std::to_string(c) + ")=" + std::to_string(sma.delta(k, c)) +
                                         " want " + std::to_string(want));
                }
            }
        }
    }
    return o;
}

Outcome criterion9() {
    Outcome o;
    using cli::BenchConfig;
    using cli::Engine;
    auto median = [](Engine e, Index n, Index m, cli::BenchResult* keep = nullptr) {
        BenchConfig cfg;
        cfg.engine = e;
        cfg.n = n;
        cfg.m = m;
        cfg.ops = kPerfOps;
        cfg.baseline_ops = 50;
        const auto r = cli::run_bench(cfg);
        std::printf("    %-8s n=%-8lld m=%-5lld p50 %.3f us  p99 %.3f us  prep %.0f+%.1f ms  baseline p50 %.0f us\n",
                    cli::engine_name(e).c_str(), static_cast<long long>(n), static_cast<long long>(m), r.engine.p50,
                    r.engine.p99, r.text_prep_ms, r.pattern_prep_ms, r.baseline.p50);
        if (keep) *keep = r;
        return r.engine.p50;
    };

    double lo = 1e300, hi = 0;
    for (Index m : {16, 256, 4096}) {
        const double p50 = median(Engine::Index, kPerfN, m);
        lo = std::min(lo, p50);
        hi = std::max(hi, p50);
    }
    o.require(hi / lo < kPerfMaxSpread, "index median spread across m " + std::to_string(hi / lo));

    for (Engine e : {Engine::BlockDelete, Engine::SingleEdit}) {
        cli::BenchResult small, large;
        const double a = median(e, kPerfSmallN, 16, &small);
        const double b = median(e, kPerfN, 16, &large);
        o.require(b / a < kPerfMaxSpread, cli::engine_name(e) + " median grows " + std::to_string(b / a) + "x");
        const double growth = large.baseline.p50 / small.baseline.p50;
        o.require(growth >= kBaselineMinGrowth && growth <= kBaselineMaxGrowth,
                  "baseline grows " + std::to_string(growth) + "x for 16x n");
    }
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    std::set<int> expect_red;
    bool perf = true;
    for (int k = 1; k < argc; ++k) {
        if (!std::strcmp(argv[k], "--expect-red") && k + 1 < argc) {
            expect_red.insert(std::atoi(argv[++k]));
        } else if (!std::strcmp(argv[k], "--no-perf")) {
            perf = false;
        } else {
            std::fprintf(stderr, "usage: %s [--expect-red N]... [--no-perf]\n", argv[0]);
            return 64;
        }
    }

    const std::pair<const char*, Outcome (*)()> criteria[] = {
        {"suffix array and node ban of ananabannabanaana", criterion1},
        {"decomposed intervals of banana: TREE(P), letter groups, group na", criterion2},
        {"four edits of ananabannabanaana, pattern banana", criterion3},
        {"block delete [5,6] of bababbbababb, pattern ababab", criterion4},
        {"insert a after 4 in bababbbababb, junction pieces", criterion5},
        {"differential suite against brute force, all engines", criterion6},
        {"prefix-suffix queries, every binary pattern up to length 12", criterion7},
        {"automaton transitions against brute force", criterion8},
        {"latency trend at n=2^20 (report only)", criterion9},
    };
    std::set<int> red;
    for (int k = 0; k < 9; ++k) {
        const int id = k + 1;
        if (id == 9 && !perf) {
            std::printf("[SKIP] %d %s\n", id, criteria[k].first);
            continue;
        }
        std::fflush(stdout);
        const Outcome o = criteria[k].second();
        std::printf("[%s] %d %s%s%s\n", o.pass ? "PASS" : "FAIL", id, criteria[k].first,
                    o.detail.empty() ? "" : " :: ", o.detail.c_str());
        std::fflush(stdout);
        if (!o.pass && id != 9) red.insert(id);
    }
    if (red != expect_red) {
        std::printf("failing criteria differ from the expected set\n");
        return 1;
    }
    if (!red.empty()) std::printf("failing criteria match the expected set\n");
    return 0;
}
