#include <benchmark/benchmark.h>

#include "pfq/pfq.hpp"

namespace {

void BM_EvalPfq2F1NearUnit(benchmark::State& state) {
    // slowly converging 2F1 just inside the unit disk
    pfq::PFQParams params{{0.8, 1.3}, {2.1}};
    for (auto _ : state) {
        auto r = pfq::eval_pfq(params, 0.9);
        benchmark::DoNotOptimize(r.value);
    }
}
BENCHMARK(BM_EvalPfq2F1NearUnit);

void BM_EvalPfq3F2UnitArgument(benchmark::State& state) {
    // z = 1 with parameter excess sigma as a range: small sigma exercises
    // the analytic tail, large sigma the plain stopping rule
    const double sigma = static_cast<double>(state.range(0)) / 10.0;
    pfq::PFQParams params{{1.1, 0.7, 0.4}, {1.6, 0.6 + sigma}};
    for (auto _ : state) {
        auto r = pfq::eval_pfq(params, 1.0);
        benchmark::DoNotOptimize(r.value);
    }
}
BENCHMARK(BM_EvalPfq3F2UnitArgument)->Arg(5)->Arg(15)->Arg(40);

void BM_EvalPfqTerminating(benchmark::State& state) {
    pfq::PFQParams params{{-8.0, 1.3, 0.4}, {5.2, 2.5}};
    for (auto _ : state) {
        double v = pfq::eval_pfq_terminating(params, 1.0);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_EvalPfqTerminating);

void BM_DixonGeneral(benchmark::State& state) {
    pfq::DixonCase cs{3.1, 0.4, 0.7, 2, 1};
    for (auto _ : state) {
        double v = pfq::dixon_general(cs);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_DixonGeneral);

void BM_ExtonRhsTheorem(benchmark::State& state) {
    pfq::TransformPoint pt{0.4, 1.1, 2, 1, 0.75};
    for (auto _ : state) {
        auto r = pfq::exton_rhs_theorem(pt);
        benchmark::DoNotOptimize(r.value);
    }
}
BENCHMARK(BM_ExtonRhsTheorem);

void BM_ReductionChainPoint(benchmark::State& state) {
    // the expensive verification path: both sides plus the double sum
    pfq::TransformPoint pt{0.8, 1.7, -1, 2, -0.9};
    for (auto _ : state) {
        auto lhs = pfq::exton_lhs_theorem(pt);
        auto mid = pfq::reduction_2_2_rhs(pt);
        auto rhs = pfq::exton_rhs_theorem(pt);
        benchmark::DoNotOptimize(lhs.value + mid.value + rhs.value);
    }
}
BENCHMARK(BM_ReductionChainPoint);

void BM_TableAuditCell(benchmark::State& state) {
    pfq::GridSpec spec;
    spec.identity = pfq::IdentityId::dixon_cell(1, 2);
    spec.tolerance = 1e-9;
    spec.samples = 10;
    for (auto _ : state) {
        auto report = pfq::run_grid(spec);
        benchmark::DoNotOptimize(report.max_residual);
    }
}
BENCHMARK(BM_TableAuditCell);

} // namespace

BENCHMARK_MAIN();
