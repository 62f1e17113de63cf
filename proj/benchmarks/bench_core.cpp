#include <benchmark/benchmark.h>

#include "lsa/corpus.hpp"
#include "lsa/format.hpp"
#include "lsa/invariants.hpp"
#include "lsa/prng.hpp"
#include "lsa/search.hpp"

using namespace lsa;

namespace {

Matrix random_matrix(Prng& rng, size_t n) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) m.at(i, j) = Scalar(Rational(rng.range(-5, 5), rng.range(1, 3)));
    return m;
}

void BM_Rref(benchmark::State& state) {
    Prng rng(42);
    const Matrix m = random_matrix(rng, static_cast<size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(rref(m).rank);
}
BENCHMARK(BM_Rref)->Arg(6)->Arg(12);

void BM_Superidentity(benchmark::State& state) {
    std::vector<Scalar> params = {Scalar(1), Scalar(Rational(1, 2))};
    const SuperAlgebra a = family_F(5, params);
    for (auto _ : state) benchmark::DoNotOptimize(a.superidentity_violations().size());
}
BENCHMARK(BM_Superidentity);

void BM_Charseq(benchmark::State& state) {
    std::vector<Scalar> params(4, Scalar(1));
    const SuperAlgebra a = family_L(6, params);
    for (auto _ : state) benchmark::DoNotOptimize(characteristic_sequence(a).even_part.first());
}
BENCHMARK(BM_Charseq);

void BM_Fingerprint(benchmark::State& state) {
    const SuperAlgebra a = thm21_mixed(3, 4);
    for (auto _ : state) benchmark::DoNotOptimize(fingerprint(a).line().size());
}
BENCHMARK(BM_Fingerprint);

void BM_Census11(benchmark::State& state) {
    SearchSpec spec;
    spec.n = 1;
    spec.m = 1;
    spec.coeffs = {Scalar(0), Scalar(1), Scalar(-1)};
    for (auto _ : state) benchmark::DoNotOptimize(census(spec).valid_count);
}
BENCHMARK(BM_Census11);

void BM_ParseSerialize(benchmark::State& state) {
    std::vector<Scalar> params = {Scalar(1), Scalar(-1), Scalar(Rational(1, 2))};
    const std::string text = serialize_lsa(family_M(4, params));
    for (auto _ : state) benchmark::DoNotOptimize(serialize_lsa(parse_lsa(text)).size());
}
BENCHMARK(BM_ParseSerialize);

}  // namespace

BENCHMARK_MAIN();
