#include "bcp/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "bcp/baseline.hpp"
#include "bcp/exact.hpp"
#include "bcp/greedy.hpp"
#include "bcp/rng.hpp"

namespace bcp {

const std::vector<Algorithm>& all_algorithms() {
    static const std::vector<Algorithm> all = {Algorithm::g,  Algorithm::ga, Algorithm::ga_lo,
                                               Algorithm::a,  Algorithm::a_lo, Algorithm::a1,
                                               Algorithm::a1_lo, Algorithm::ffd};
    return all;
}

std::string algorithm_name(Algorithm algorithm) {
    switch (algorithm) {
        case Algorithm::g: return "g";
        case Algorithm::ga: return "ga";
        case Algorithm::ga_lo: return "ga_lo";
        case Algorithm::a: return "a";
        case Algorithm::a_lo: return "a_lo";
        case Algorithm::a1: return "a1";
        case Algorithm::a1_lo: return "a1_lo";
        case Algorithm::ffd: return "ffd";
    }
    throw ValidationError("unknown algorithm enum value");
}

Algorithm algorithm_from_name(const std::string& name) {
    for (Algorithm alg : all_algorithms())
        if (algorithm_name(alg) == name) return alg;
    throw ValidationError("unknown algorithm: \"" + name + "\"");
}

Packing run_algorithm(Algorithm algorithm, const Instance& instance, LexKey key) {
    switch (algorithm) {
        case Algorithm::g: return pack_g(instance, input_order(instance));
        case Algorithm::ga: return pack_ga(instance, input_order(instance));
        case Algorithm::ga_lo: return pack_ga(instance, lex_order(instance, key));
        case Algorithm::a: return algorithm_a(instance);
        case Algorithm::a_lo: return algorithm_a(reorder(instance, lex_order(instance, key)));
        case Algorithm::a1: return algorithm_a1(instance);
        case Algorithm::a1_lo: return algorithm_a1(reorder(instance, lex_order(instance, key)));
        case Algorithm::ffd: return pack_ffd_wrap(instance);
    }
    throw ValidationError("unknown algorithm enum value");
}

namespace {

Height draw_height(SplitMix64& rng) {
    double u = rng.next_unit();  // (0, 1]
    auto units = static_cast<Height>(std::llround(u * static_cast<double>(kUnit)));
    return units == 0 ? 1 : units;  // never round down to an empty bar
}

}  // namespace

Instance generate(int n, std::uint64_t seed) {
    if (n < 1) throw ValidationError("generate needs n >= 1");
    SplitMix64 rng(seed);
    Instance instance;
    instance.strip_height = kUnit;
    for (int i = 0; i < n; ++i) {
        Height a = draw_height(rng);
        Height b = draw_height(rng);
        instance.charts.push_back({i, {a, b}});
        instance.origins.push_back({i});
    }
    return instance;
}

double compute_r(int algorithm_length, int denominator) {
    if (denominator < 1) throw ValidationError("R needs a positive denominator");
    return static_cast<double>(algorithm_length) / static_cast<double>(denominator);
}

namespace {

struct InstanceOutcome {
    int denominator = 0;
    bool denominator_exact = false;
    std::vector<int> lengths;
    std::vector<double> runtime_ms;
    std::string error;
};

InstanceOutcome measure_instance(const BenchConfig& config, int n, int index) {
    InstanceOutcome outcome;
    try {
        Instance instance = generate(n, derive_seed(config.seed, n, index));

        bool attempt_exact =
            config.denominator == DenominatorPolicy::exact ||
            (config.denominator == DenominatorPolicy::automatic && n <= kAutoExactMaxN);
        if (attempt_exact) {
            ExactResult exact = solve_exact(instance, config.exact_time_limit_sec);
            if (exact.proven_optimal) {
                outcome.denominator = exact.length;
                outcome.denominator_exact = true;
            } else {
                outcome.denominator = packing_lower_bound(instance);
            }
        } else {
            outcome.denominator = packing_lower_bound(instance);
        }

        for (Algorithm alg : config.algorithms) {
            auto t0 = std::chrono::steady_clock::now();
            Packing packing = run_algorithm(alg, instance, config.lex_key);
            auto t1 = std::chrono::steady_clock::now();
            outcome.lengths.push_back(occupied_count(instance, packing));
            outcome.runtime_ms.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
        }
    } catch (const std::exception& e) {
        outcome.error = e.what();
    }
    return outcome;
}

}  // namespace

std::vector<BenchRecord> run_bench(const BenchConfig& config) {
    for (int n : config.sizes)
        if (n < 1) throw ValidationError("bench sizes must be positive");
    if (config.instances_per_size < 1)
        throw ValidationError("bench needs at least one instance per size");
    if (config.algorithms.empty()) return {};

    std::vector<BenchRecord> records;
    for (int n : config.sizes) {
        const int count = config.instances_per_size;
        std::vector<InstanceOutcome> outcomes(count);

        if (config.jobs == 1) {
            for (int i = 0; i < count; ++i) outcomes[i] = measure_instance(config, n, i);
        } else {
#ifdef _OPENMP
            int threads = config.jobs == 0 ? omp_get_max_threads() : config.jobs;
#pragma omp parallel for schedule(dynamic) num_threads(threads)
            for (int i = 0; i < count; ++i) outcomes[i] = measure_instance(config, n, i);
#else
            for (int i = 0; i < count; ++i) outcomes[i] = measure_instance(config, n, i);
#endif
        }

        for (const auto& outcome : outcomes)
            if (!outcome.error.empty()) throw std::runtime_error("bench worker: " + outcome.error);

        int exact_count = 0;
        for (const auto& outcome : outcomes) exact_count += outcome.denominator_exact;
        std::string kind = exact_count == count ? "exact"
                           : exact_count == 0
                               ? "lower_bound"
                               : "mixed:" + std::to_string(exact_count) + "/" + std::to_string(count);

        // fold in instance index order so results do not depend on the
        // completion order of the parallel loop
        for (int j = 0; j < static_cast<int>(config.algorithms.size()); ++j) {
            double sum_r = 0, sum_ms = 0;
            for (int i = 0; i < count; ++i) {
                sum_r += compute_r(outcomes[i].lengths[j], outcomes[i].denominator);
                sum_ms += outcomes[i].runtime_ms[j];
            }
            double mean = sum_r / count;
            double varsum = 0;
            for (int i = 0; i < count; ++i) {
                double d = compute_r(outcomes[i].lengths[j], outcomes[i].denominator) - mean;
                varsum += d * d;
            }
            BenchRecord record;
            record.algorithm = config.algorithms[j];
            record.n = n;
            record.r_av = mean;
            record.r_sd = count > 1 ? std::sqrt(varsum / (count - 1)) : 0.0;
            record.mean_runtime_ms = sum_ms / count;
            record.denominator_kind = kind;
            records.push_back(record);
        }
    }

    std::sort(records.begin(), records.end(), [](const BenchRecord& x, const BenchRecord& y) {
        if (x.n != y.n) return x.n < y.n;
        return static_cast<int>(x.algorithm) < static_cast<int>(y.algorithm);
    });
    return records;
}

std::string records_to_csv(const std::vector<BenchRecord>& records) {
    std::string out = "algorithm,n,R_av,R_sd,mean_runtime_ms,denominator_kind\n";
    char line[192];
    for (const auto& r : records) {
        std::snprintf(line, sizeof line, "%s,%d,%.6f,%.6f,%.3f,%s\n",
                      algorithm_name(r.algorithm).c_str(), r.n, r.r_av, r.r_sd, r.mean_runtime_ms,
                      r.denominator_kind.c_str());
        out += line;
    }
    return out;
}

std::string records_to_markdown(const std::vector<BenchRecord>& records) {
    // one row per size, R_av/R_sd column pair per algorithm
    std::vector<Algorithm> algs;
    std::vector<int> sizes;
    for (const auto& r : records) {
        if (std::find(algs.begin(), algs.end(), r.algorithm) == algs.end())
            algs.push_back(r.algorithm);
        if (std::find(sizes.begin(), sizes.end(), r.n) == sizes.end()) sizes.push_back(r.n);
    }
    std::sort(algs.begin(), algs.end());
    std::sort(sizes.begin(), sizes.end());

    std::string out = "| n |";
    for (Algorithm alg : algs)
        out += " " + algorithm_name(alg) + " R_av | " + algorithm_name(alg) + " R_sd |";
    out += "\n|---|";
    for (std::size_t i = 0; i < algs.size(); ++i) out += "---|---|";
    out += "\n";
    char cell[64];
    for (int n : sizes) {
        out += "| " + std::to_string(n) + " |";
        for (Algorithm alg : algs) {
            const BenchRecord* found = nullptr;
            for (const auto& r : records)
                if (r.n == n && r.algorithm == alg) found = &r;
            if (found) {
                std::snprintf(cell, sizeof cell, " %.3f | %.3f |", found->r_av, found->r_sd);
                out += cell;
            } else {
                out += " - | - |";
            }
        }
        out += "\n";
    }
    return out;
}

}  // namespace bcp
