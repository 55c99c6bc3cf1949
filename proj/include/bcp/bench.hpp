#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bcp/model.hpp"
#include "bcp/twobar.hpp"

namespace bcp {

enum class Algorithm { g, ga, ga_lo, a, a_lo, a1, a1_lo, ffd };

const std::vector<Algorithm>& all_algorithms();
std::string algorithm_name(Algorithm algorithm);
Algorithm algorithm_from_name(const std::string& name);

// Single dispatch point used by the CLI, the harness and the tests. The
// _lo variants apply the lexicographic pre-order to the whole pipeline.
Packing run_algorithm(Algorithm algorithm, const Instance& instance,
                      LexKey key = LexKey::first_bar);

enum class DenominatorPolicy { exact, lower_bound, automatic };

// automatic attempts the exact solver only up to this size and falls back
// to the lower bound beyond it (and on timeouts).
inline constexpr int kAutoExactMaxN = 16;

struct BenchConfig {
    std::vector<int> sizes;
    int instances_per_size = 100;
    std::uint64_t seed = 1;
    std::vector<Algorithm> algorithms;
    DenominatorPolicy denominator = DenominatorPolicy::automatic;
    double exact_time_limit_sec = 10.0;
    int jobs = 1;  // 1 = serial reference path, 0 = all hardware threads
    LexKey lex_key = LexKey::first_bar;
};

struct BenchRecord {
    Algorithm algorithm = Algorithm::g;
    int n = 0;
    double r_av = 0.0;
    double r_sd = 0.0;  // sample standard deviation (n-1)
    double mean_runtime_ms = 0.0;
    std::string denominator_kind;  // "exact", "lower_bound" or "mixed:<k>/<m>"
};

// n charts, 2n heights drawn uniformly from (0,1] in chart order (a_i then
// b_i), each rounded half-up to the fixed-point grid; a draw that would
// round to zero becomes the smallest positive grid value.
Instance generate(int n, std::uint64_t seed);

double compute_r(int algorithm_length, int denominator);

// Per-size sweep over instances_per_size seeded instances. The per-instance
// loop runs serially for jobs == 1 and under OpenMP otherwise; results are
// stored by instance index and folded in index order, so every field except
// the measured runtimes is bit-identical across jobs settings and runs.
// Exact-solver timeouts downgrade the denominator, never abort the sweep.
std::vector<BenchRecord> run_bench(const BenchConfig& config);

std::string records_to_csv(const std::vector<BenchRecord>& records);
std::string records_to_markdown(const std::vector<BenchRecord>& records);

}  // namespace bcp
