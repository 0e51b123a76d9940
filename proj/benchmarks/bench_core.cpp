#include <benchmark/benchmark.h>

#include "pruefer/classifier.hpp"
#include "pruefer/harness.hpp"
#include "pruefer/ideal_lattice.hpp"
#include "pruefer/poly_content.hpp"
#include "pruefer/ring_core.hpp"

using namespace pruefer;

namespace {

RingPtr residue_extension(std::uint64_t n, std::size_t rank) {
    RingPtr a = make_zmod(n);
    return make_trivial_extension(a, make_residue_space(a, rank)).ring;
}

void BM_ZmodTables(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(make_zmod(static_cast<std::uint64_t>(state.range(0))));
}
BENCHMARK(BM_ZmodTables)->Arg(64)->Arg(1024)->Arg(4096);

void BM_IdealLattice(benchmark::State& state) {
    RingPtr r = residue_extension(static_cast<std::uint64_t>(state.range(0)), 2);
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_ideals(r).size());
    state.SetLabel("order " + std::to_string(r->order()));
}
BENCHMARK(BM_IdealLattice)->Arg(4)->Arg(8)->Arg(9)->Arg(25);

void BM_ClassifyResidueExtension(benchmark::State& state) {
    RingPtr r = residue_extension(static_cast<std::uint64_t>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(classify(r));
    state.SetLabel("order " + std::to_string(r->order()));
}
BENCHMARK(BM_ClassifyResidueExtension)->Arg(4)->Arg(8)->Arg(16)->Arg(27)->Unit(benchmark::kMicrosecond);

void BM_WitnessSearch(benchmark::State& state) {
    RingPtr a = make_zmod(4);
    RingPtr r = make_trivial_extension(a, make_free_module(a, 1)).ring;
    GaussianContext ctx(r);
    RingPoly f(r, {r->parse("(2,0)"), r->parse("(2,0)")});  // Gaussian, so the search is exhaustive
    const auto degree = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(gaussian_witness_search(ctx, f, degree, UINT64_MAX));
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * search_space(r->order(), degree)));
}
BENCHMARK(BM_WitnessSearch)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_Corpus(benchmark::State& state) {
    CorpusConfig config;
    config.max_order = static_cast<std::size_t>(state.range(0));
    config.jobs = 1;
    for (auto _ : state) benchmark::DoNotOptimize(run_corpus(config).entries.size());
}
BENCHMARK(BM_Corpus)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
