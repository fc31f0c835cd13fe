#include <benchmark/benchmark.h>

#include "levrecon/codebook.hpp"
#include "levrecon/decoder.hpp"
#include "levrecon/oracle.hpp"

using namespace levrecon;

namespace {

std::vector<Word> decodable_stream(std::size_t n, ErrorBudgets b, std::uint64_t seed, Word& x) {
    const PatternSampler sampler(n, 4, b);
    Rng rng(seed);
    x = sample_codeword(CodeParams(4, static_cast<std::int64_t>(n)), rng);
    StreamDecoder probe(DecoderConfig{4, n, b, std::nullopt});
    std::vector<Word> stream;
    std::vector<Symbol> y;
    while (!probe.halted()) {
        sampler.transmit(x.symbols(), rng, y);
        stream.emplace_back(y, x.alphabet());
        probe.push(stream.back());
    }
    return stream;
}

void BM_DecodeStream(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const ErrorBudgets b{1, 1, 1};
    Word x(Alphabet(4));
    const auto stream = decodable_stream(n, b, 7, x);
    std::int64_t symbols = 0;
    for (const auto& y : stream) symbols += static_cast<std::int64_t>(y.size());
    const DecoderConfig cfg{4, n, b, std::nullopt};
    for (auto _ : state) benchmark::DoNotOptimize(decode_stream(stream, cfg));
    state.SetItemsProcessed(state.iterations() * symbols);
}
BENCHMARK(BM_DecodeStream)->Arg(100)->Arg(200)->Arg(400);

void BM_Transmit(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const PatternSampler sampler(n, 4, ErrorBudgets{1, 1, 1});
    Rng rng(3);
    const Word x = sample_codeword(CodeParams(4, static_cast<std::int64_t>(n)), rng);
    std::vector<Symbol> y;
    for (auto _ : state) {
        sampler.transmit(x.symbols(), rng, y);
        benchmark::DoNotOptimize(y.data());
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_Transmit)->Arg(100)->Arg(1000);

void BM_ConfusableMax(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::vector<Symbol> a(n, 0), b(n, 0);
    a[n / 2 - 1] = 1;
    b[n / 2] = 1;
    const Word x(a, Alphabet(2)), xp(b, Alphabet(2));
    for (auto _ : state)
        benchmark::DoNotOptimize(oracle::confusable_max(x, xp, 2, CountMode::AtMost, ChannelModel::NonMultisetPattern));
}
BENCHMARK(BM_ConfusableMax)->Arg(8)->Arg(16);

void BM_ExtremalSearch(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(oracle::extremal_search(n, 2, 2, CountMode::Exactly, ChannelModel::MultisetPattern));
}
BENCHMARK(BM_ExtremalSearch)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
