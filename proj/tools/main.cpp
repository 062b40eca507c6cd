#include <fstream>
#include <functional>
#include <optional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "bench.hpp"
#include "ephem/edit_matcher.hpp"
#include "ephem/ephemeral_index.hpp"
#include "ephem/oracle.hpp"
#include "script.hpp"

using namespace ephem;
using namespace ephem::cli;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string format(const std::vector<Index>& occ) {
    if (occ.empty()) return "-";
    std::string line;
    for (std::size_t k = 0; k < occ.size(); ++k) {
        if (k) line += ' ';
        line += std::to_string(occ[k]);
    }
    return line;
}

struct RunArgs {
    std::string mode = "index";
    std::string text_file;
    std::string pattern_file;
    std::string script_file;
    Index epsilon = 0;
    bool tokens = false;
    bool verify = false;
};

int run(const RunArgs& args) {
    const Engine engine = parse_engine(args.mode);
    std::vector<ScriptLine> script;
    {
        std::ifstream in(args.script_file, std::ios::binary);
        if (!in) throw std::runtime_error("cannot open " + args.script_file);
        script = parse_script(in, args.tokens);
    }

    std::vector<Letter> t, p;
    std::uint64_t sigma = 256;
    if (args.tokens) {
        std::istringstream ts(read_file(args.text_file)), ps(read_file(args.pattern_file));
        t = parse_tokens(ts, args.text_file);
        p = parse_tokens(ps, args.pattern_file);
        Letter top = 0;
        for (Letter c : t) top = std::max(top, c);
        for (Letter c : p) top = std::max(top, c);
        for (const auto& line : script) {
            for (Letter c : line.op.s) top = std::max(top, c);
        }
        sigma = std::uint64_t{top} + 1;
    } else {
        const Text tt = Text::from_bytes(read_file(args.text_file));
        const Text pp = Text::from_bytes(read_file(args.pattern_file));
        t = tt.vec();
        p = pp.vec();
    }
    if (t.empty()) throw std::runtime_error("the text is empty");
    if (p.empty()) throw std::runtime_error("the pattern is empty");

    Index epsilon = args.epsilon;
    if (epsilon == 0) {
        epsilon = 1;
        for (const auto& line : script) epsilon = std::max<Index>(epsilon, line.op.s.size());
    }

    // reject every bad line before answering anything
    const auto n = static_cast<Index>(t.size());
    bool bad = false;
    for (const auto& line : script) {
        try {
            if (engine == Engine::BlockDelete && line.op.kind != EditOp::Kind::Delete) {
                throw std::invalid_argument("pm-del accepts only D lines");
            }
            if (engine == Engine::SingleEdit && line.op.kind == EditOp::Kind::Delete && line.op.q != line.op.p) {
                throw std::invalid_argument("pm-edit deletes single letters only");
            }
            validate_edit(line.op, n, sigma, engine == Engine::Index ? epsilon : 1);
        } catch (const std::invalid_argument& e) {
            std::cerr << "line " << line.line_no << ": " << e.what() << "\n";
            bad = true;
        }
    }
    if (bad) return 1;

    const Text text(t, sigma), pattern(p, sigma);
    std::function<std::vector<Index>(const EditOp&)> query;
    std::optional<EphemeralTextIndex> eti;
    std::optional<PatternHandle> ph;
    std::optional<BlockDeleteMatcher> bd;
    std::optional<EditMatcher> em;
    switch (engine) {
        case Engine::Index:
            eti.emplace(text);
            ph.emplace(*eti, pattern, epsilon);
            query = [&](const EditOp& op) { return ph->occurrences_after(op); };
            break;
        case Engine::BlockDelete:
            bd.emplace(text, pattern);
            query = [&](const EditOp& op) { return bd->occurrences_after_delete(op.q, op.p); };
            break;
        case Engine::SingleEdit:
            em.emplace(text, pattern);
            query = [&](const EditOp& op) { return em->occurrences_after_edit(op); };
            break;
    }

    for (const auto& line : script) {
        const auto got = query(line.op);
        if (args.verify) {
            const auto want = oracle::occurrences_after(t, p, line.op).occurrences;
            if (got != want) {
                std::cout.flush();
                std::cerr << "line " << line.line_no << ": verification failed for " << to_string(line.op)
                          << "\n  engine: " << format(got) << "\n  oracle: " << format(want) << "\n";
                return 2;
            }
        }
        std::cout << format(got) << "\n";
    }
    return 0;
}

struct BenchArgs {
    std::string mode = "index";
    std::vector<Index> n{1 << 16};
    std::vector<Index> m{16};
    Letter sigma = 4;
    Index ops = 10000;
    Index epsilon = 4;
    Index baseline_ops = 100;
    std::uint64_t seed = 1;
    bool json = false;
};

int bench(const BenchArgs& args) {
    nlohmann::json rows = nlohmann::json::array();
    if (!args.json) {
        std::printf("%-8s %9s %6s %8s %11s %11s %10s %10s %10s %12s %10s\n", "mode", "n", "m", "ops",
                    "text_ms", "pattern_ms", "p50_us", "p90_us", "p99_us", "baseline_us", "occ");
    }
    for (Index n : args.n) {
        for (Index m : args.m) {
            BenchConfig cfg;
            cfg.engine = parse_engine(args.mode);
            cfg.n = n;
            cfg.m = m;
            cfg.sigma = args.sigma;
            cfg.ops = args.ops;
            cfg.epsilon = args.epsilon;
            cfg.baseline_ops = args.baseline_ops;
            cfg.seed = args.seed;
            const BenchResult r = run_bench(cfg);
            if (args.json) {
                rows.push_back({{"mode", args.mode}, {"n", n}, {"m", m}, {"sigma", args.sigma},
                                {"ops", args.ops}, {"seed", args.seed},
                                {"text_prep_ms", r.text_prep_ms}, {"pattern_prep_ms", r.pattern_prep_ms},
                                {"engine_us", {{"p50", r.engine.p50}, {"p90", r.engine.p90},
                                               {"p99", r.engine.p99}, {"mean", r.engine.mean},
                                               {"samples", r.engine.samples}}},
                                {"baseline_us", {{"p50", r.baseline.p50}, {"mean", r.baseline.mean},
                                                 {"samples", r.baseline.samples}}},
                                {"occurrences", r.occurrences}});
            } else {
                std::printf("%-8s %9lld %6lld %8lld %11.1f %11.2f %10.2f %10.2f %10.2f %12.1f %10lld\n",
                            args.mode.c_str(), static_cast<long long>(n), static_cast<long long>(m),
                            static_cast<long long>(args.ops), r.text_prep_ms, r.pattern_prep_ms, r.engine.p50,
                            r.engine.p90, r.engine.p99, r.baseline.p50, static_cast<long long>(r.occurrences));
            }
        }
    }
    if (args.json) std::cout << rows.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pattern matching in a text under ephemeral edits"};
    app.require_subcommand(1);

    RunArgs ra;
    auto* run_cmd = app.add_subcommand("run", "answer an edit script, one output line per edit");
    run_cmd->add_option("--mode", ra.mode, "index | pm-del | pm-edit")
        ->check(CLI::IsMember({"index", "pm-del", "pm-edit"}));
    run_cmd->add_option("--text", ra.text_file, "text file")->required()->check(CLI::ExistingFile);
    run_cmd->add_option("--pattern", ra.pattern_file, "pattern file")->required()->check(CLI::ExistingFile);
    run_cmd->add_option("--script", ra.script_file, "edit script")->required()->check(CLI::ExistingFile);
    run_cmd->add_option("--epsilon", ra.epsilon, "longest insertable block (default: longest in the script)")
        ->check(CLI::PositiveNumber);
    run_cmd->add_flag("--tokens", ra.tokens, "files hold whitespace-separated integers");
    run_cmd->add_flag("--verify", ra.verify, "check every answer against brute force");

    BenchArgs ba;
    auto* bench_cmd = app.add_subcommand("bench", "per-edit latency on random data");
    bench_cmd->add_option("--mode", ba.mode, "index | pm-del | pm-edit")
        ->check(CLI::IsMember({"index", "pm-del", "pm-edit"}));
    bench_cmd->add_option("--n", ba.n, "text lengths")->check(CLI::PositiveNumber);
    bench_cmd->add_option("--m", ba.m, "pattern lengths")->check(CLI::PositiveNumber);
    bench_cmd->add_option("--sigma", ba.sigma, "alphabet size")->check(CLI::Range(1, 1 << 16));
    bench_cmd->add_option("--ops", ba.ops, "edits per configuration")->check(CLI::NonNegativeNumber);
    bench_cmd->add_option("--epsilon", ba.epsilon, "longest inserted block")->check(CLI::PositiveNumber);
    bench_cmd->add_option("--baseline-ops", ba.baseline_ops, "edits timed for the rescan baseline")
        ->check(CLI::NonNegativeNumber);
    bench_cmd->add_option("--seed", ba.seed, "random seed");
    bench_cmd->add_flag("--json", ba.json, "JSON output");

    CLI11_PARSE(app, argc, argv);
    try {
        if (*run_cmd) return run(ra);
        return bench(ba);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
