#include <benchmark/benchmark.h>

#include "heckelab/field.hpp"
#include "heckelab/hecke.hpp"
#include "heckelab/ideal.hpp"
#include "heckelab/invariants.hpp"

using namespace heckelab;

namespace {

template <class Field>
HeckeSymmetry<Field> standard(const Field& f, int n) {
    return detect_rank(check_closed(validate(f, builtin_standard(f, n))));
}

void BM_QScalarArithmetic(benchmark::State& state) {
    const auto a = QScalar::parse("(q^2 - 3)/(q + 1)");
    const auto b = QScalar::parse("(5*q^4 - q)/(2*q^2 + 3)");
    for (auto _ : state) benchmark::DoNotOptimize(a * b + a / b);
}
BENCHMARK(BM_QScalarArithmetic);

void BM_AxiomsSymbolic(benchmark::State& state) {
    SymbolicField f;
    const auto r = builtin_standard(f, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(check_yang_baxter(f, r));
        benchmark::DoNotOptimize(check_hecke(f, r));
    }
}
BENCHMARK(BM_AxiomsSymbolic)->Arg(2)->Arg(3);

void BM_AntisymmetrizerChainSymbolic(benchmark::State& state) {
    SymbolicField f;
    const auto h = check_closed(validate(f, builtin_standard(f, static_cast<int>(state.range(0)))));
    for (auto _ : state) benchmark::DoNotOptimize(detect_rank(h));
}
BENCHMARK(BM_AntisymmetrizerChainSymbolic)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_AntisymmetrizerChainModular(benchmark::State& state) {
    ModularField f(FieldSpec::default_prime, 123456789);
    const auto h = check_closed(validate(f, builtin_standard(f, 4)));
    for (auto _ : state) benchmark::DoNotOptimize(detect_rank(h));
}
BENCHMARK(BM_AntisymmetrizerChainModular)->Unit(benchmark::kMillisecond);

void BM_IdealComponent(benchmark::State& state) {
    RationalField f(Rat(2));
    const auto h = standard(f, 3);
    const auto rels = re_relations(h);
    const auto d = static_cast<std::uint32_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(ideal_component(rels, 3, d, f.one()).rank());
}
BENCHMARK(BM_IdealComponent)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_CentralSet(benchmark::State& state) {
    RationalField f(Rat(2));
    const auto h = standard(f, static_cast<int>(state.range(0)));
    const auto td = trace_data(h);
    for (auto _ : state) benchmark::DoNotOptimize(central_set(h, td));
}
BENCHMARK(BM_CentralSet)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_NewtonMembership(benchmark::State& state) {
    RationalField f(Rat(2));
    const auto h = standard(f, 3);
    const auto cs = central_set(h, trace_data(h));
    GradedIdeal<Rat> ideal(re_relations(h), 3, f.one());
    ideal.component(3);
    const auto defect = newton_defect(f, cs, 3);
    for (auto _ : state) benchmark::DoNotOptimize(ideal.is_member(defect).member);
}
BENCHMARK(BM_NewtonMembership)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
