#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ephem/text.hpp"

namespace ephem::cli {

enum class Engine { Index, BlockDelete, SingleEdit };

Engine parse_engine(const std::string& mode);
std::string engine_name(Engine e);

struct BenchConfig {
    Engine engine = Engine::Index;
    Index n = 1 << 16;
    Index m = 16;
    Letter sigma = 4;
    Index ops = 10000;
    Index epsilon = 4;
    Index baseline_ops = 100;  // the rescan baseline is O(n) per op, so it is sampled
    std::uint64_t seed = 1;
};

/// Per-op latencies in microseconds.
struct Latency {
    Index samples = 0;
    double p50 = 0;
    double p90 = 0;
    double p99 = 0;
    double mean = 0;
};

struct BenchResult {
    BenchConfig config;
    double text_prep_ms = 0;     // text side (Index) or whole matcher
    double pattern_prep_ms = 0;  // pattern side (Index only)
    Latency engine;
    Latency baseline;
    Index occurrences = 0;
};

/*
 * Random text over [0, sigma) with the pattern cut from it, then `ops`
 * random edits of the kind the engine supports. The baseline applies each
 * edit to a copy of T and rescans it.
 */
BenchResult run_bench(const BenchConfig& cfg);

}  // namespace ephem::cli
