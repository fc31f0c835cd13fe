#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "levrecon/error_patterns.hpp"
#include "levrecon/rng.hpp"

namespace levrecon {

struct SimSpec {
    int q = 4;
    std::size_t n = 100;
    ErrorBudgets budgets;
    std::uint64_t samples = 1000;
    std::uint64_t seed = kDefaultSeed;
    unsigned jobs = 1;
    std::uint64_t max_reads = 1'000'000;
};

struct SimResult {
    SimSpec spec;
    /// Over halting trials only.
    double average = 0.0;
    double median = 0.0;
    /// reads consumed -> number of halting trials.
    std::map<std::uint64_t, std::uint64_t> histogram;
    std::uint64_t halted = 0;
    std::uint64_t failures = 0;       // trials ending with the empty word
    std::uint64_t wrong_decodes = 0;  // nonempty output different from x
    double wall_seconds = 0.0;
    /// n >= (q-1) p (t_d + t_s); halting is only guaranteed in the limit then.
    bool halting_hypothesis = true;
};

bool halting_hypothesis_holds(const SimSpec& spec);

/// Channels-until-decode over independent trials.  Trial k uses
/// Rng::for_stream(seed, k), so results are identical for any job count.
SimResult run_sim(const SimSpec& spec);

std::vector<SimResult> run_sweep(const std::vector<SimSpec>& specs);

/// Columns: n,ts,td,ti,average,median,failures,samples
void write_sweep_csv(std::ostream& out, const std::vector<SimResult>& results);

/// Read cap for one stream: 50 times the reference median at the twelve
/// reference points (q = 4), otherwise 10^6.
std::uint64_t default_read_cap(int q, std::size_t n, const ErrorBudgets& budgets);

/// The twelve (n, t_s, t_d, t_i) reference points at q = 4.
std::vector<SimSpec> reference_table_specs(std::uint64_t samples, std::uint64_t seed, unsigned jobs);

}  // namespace levrecon
