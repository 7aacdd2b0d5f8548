// Serial reference vs OpenMP certification on generated branches.

#include <benchmark/benchmark.h>

#include "qolimits/certify.hpp"
#include "support/generators.hpp"

using namespace qolimits;

namespace {

const std::vector<QOStructure>& structures() {
    static const std::vector<QOStructure> all = [] {
        std::vector<QOStructure> out;
        for (const auto& spec : testing::generated_catalog(12, 99)) out.push_back(testing::structure_of(spec));
        return out;
    }();
    return all;
}

template <CertificationReport (*Certify)(const QOStructure&, const LimitsDecomposition&, const CertifyOptions&)>
void run(benchmark::State& state) {
    const auto& q = structures()[static_cast<std::size_t>(state.range(0))];
    const auto d = decompose(q);
    const CertifyOptions opts{.trials = 1000, .samples = 50, .seed = 1};
    for (auto _ : state) benchmark::DoNotOptimize(Certify(q, d, opts));
    state.SetItemsProcessed(state.iterations() * static_cast<long>(opts.trials));
}

void BM_CertifySerial(benchmark::State& state) { run<certify_serial>(state); }
void BM_CertifyOpenMP(benchmark::State& state) { run<certify>(state); }

}  // namespace

BENCHMARK(BM_CertifySerial)->DenseRange(0, 11, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CertifyOpenMP)->DenseRange(0, 11, 4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
