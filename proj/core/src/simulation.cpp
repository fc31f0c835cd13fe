#include "levrecon/simulation.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <thread>

#include "levrecon/codebook.hpp"
#include "levrecon/decoder.hpp"
#include "levrecon/error.hpp"

namespace levrecon {

bool halting_hypothesis_holds(const SimSpec& spec) {
    const double p = 16.0 / std::exp(1.0);
    return static_cast<double>(spec.n) >=
           (spec.q - 1) * p * static_cast<double>(spec.budgets.deletions + spec.budgets.substitutions);
}

namespace {

struct Trial {
    std::uint64_t reads = 0;
    bool halted = false;
    bool wrong = false;
};

Trial run_trial(const SimSpec& spec, const CodeParams& code, const PatternSampler& sampler, std::uint64_t index) {
    Rng rng = Rng::for_stream(spec.seed, index);
    const Word x = sample_codeword(code, rng);
    DecoderConfig cfg{spec.q, spec.n, spec.budgets, spec.max_reads};
    StreamDecoder decoder(cfg);
    std::vector<Symbol> y;
    while (!decoder.halted() && !decoder.exhausted()) {
        sampler.transmit(x.symbols(), rng, y);
        decoder.push(std::span<const Symbol>(y));
    }
    Trial t;
    t.reads = decoder.result().reads_consumed;
    t.halted = decoder.halted();
    t.wrong = t.halted && *decoder.result().word != x;
    return t;
}

}  // namespace

SimResult run_sim(const SimSpec& spec) {
    if (spec.samples < 1) throw DomainError("samples must be >= 1");
    if (spec.max_reads < 1) throw DomainError("max_reads must be >= 1");
    const CodeParams code(spec.q, static_cast<std::int64_t>(spec.n));
    const PatternSampler sampler(spec.n, spec.q, spec.budgets);
    DecoderConfig{spec.q, spec.n, spec.budgets, spec.max_reads}.validate();

    const auto start = std::chrono::steady_clock::now();
    std::vector<Trial> trials(spec.samples);
    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
        for (std::uint64_t k; (k = next.fetch_add(1)) < spec.samples;) trials[k] = run_trial(spec, code, sampler, k);
    };
    const unsigned jobs = static_cast<unsigned>(std::min<std::uint64_t>(std::max(1u, spec.jobs), spec.samples));
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    SimResult r;
    r.spec = spec;
    r.halting_hypothesis = halting_hypothesis_holds(spec);
    std::vector<std::uint64_t> reads;
    long double sum = 0;
    for (const Trial& t : trials) {
        if (!t.halted) {
            ++r.failures;
            continue;
        }
        ++r.halted;
        if (t.wrong) ++r.wrong_decodes;
        ++r.histogram[t.reads];
        reads.push_back(t.reads);
        sum += t.reads;
    }
    if (!reads.empty()) {
        r.average = static_cast<double>(sum / static_cast<long double>(reads.size()));
        std::sort(reads.begin(), reads.end());
        const std::size_t m = reads.size() / 2;
        r.median = reads.size() % 2 ? static_cast<double>(reads[m])
                                    : (static_cast<double>(reads[m - 1]) + static_cast<double>(reads[m])) / 2.0;
    }
    r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

std::vector<SimResult> run_sweep(const std::vector<SimSpec>& specs) {
    std::vector<SimResult> out;
    out.reserve(specs.size());
    for (const auto& s : specs) out.push_back(run_sim(s));
    return out;
}

void write_sweep_csv(std::ostream& out, const std::vector<SimResult>& results) {
    out << "n,ts,td,ti,average,median,failures,samples\n";
    for (const auto& r : results) {
        const auto& s = r.spec;
        out << s.n << ',' << s.budgets.substitutions << ',' << s.budgets.deletions << ',' << s.budgets.insertions << ','
            << std::fixed << std::setprecision(3) << r.average << ',' << std::setprecision(1) << r.median
            << std::defaultfloat << ',' << r.failures << ',' << s.samples << '\n';
    }
}

namespace {

struct Row {
    std::size_t n;
    int ts, td, ti;
    std::uint64_t median;
};

constexpr Row kReferenceRows[] = {{20, 1, 1, 1, 390},   {60, 1, 1, 1, 280},   {100, 1, 1, 1, 263}, {200, 1, 1, 1, 252},
                                  {100, 2, 1, 1, 3506}, {100, 1, 2, 1, 1166}, {100, 1, 1, 2, 1059}, {100, 1, 2, 2, 4685},
                                  {100, 0, 0, 1, 6},    {100, 0, 1, 1, 20},   {100, 0, 0, 2, 29},  {100, 0, 0, 3, 118}};

}  // namespace

std::uint64_t default_read_cap(int q, std::size_t n, const ErrorBudgets& budgets) {
    if (q == 4)
        for (const Row& row : kReferenceRows)
            if (row.n == n && row.ts == budgets.substitutions && row.td == budgets.deletions &&
                row.ti == budgets.insertions)
                return 50 * row.median;
    return 1'000'000;
}

std::vector<SimSpec> reference_table_specs(std::uint64_t samples, std::uint64_t seed, unsigned jobs) {
    std::vector<SimSpec> specs;
    for (const Row& row : kReferenceRows) {
        SimSpec s;
        s.q = 4;
        s.n = row.n;
        s.budgets = ErrorBudgets{row.ts, row.td, row.ti};
        s.samples = samples;
        s.seed = seed;
        s.jobs = jobs;
        s.max_reads = default_read_cap(4, row.n, s.budgets);
        specs.push_back(s);
    }
    return specs;
}

}  // namespace levrecon
