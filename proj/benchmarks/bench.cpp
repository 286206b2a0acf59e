#include "k3lat/catalog.hpp"
#include "k3lat/discform.hpp"
#include "k3lat/normal_form.hpp"
#include "k3lat/shortvec.hpp"

#include <benchmark/benchmark.h>

using namespace k3lat;

static void BM_short_vectors_omega3(benchmark::State& state) {
    Lattice om = lattice_Omega(3);
    Int bound(state.range(0));
    for (auto _ : state) {
        EnumReport rep = short_vectors(om, bound);
        benchmark::DoNotOptimize(rep.counts);
    }
}
BENCHMARK(BM_short_vectors_omega3)->Arg(4)->Arg(6)->Arg(8);

static void BM_lll_omega7(benchmark::State& state) {
    Lattice om = lattice_Omega(7);
    MatZ g = om.gram;
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j) g(i, j) = -g(i, j);
    for (auto _ : state) {
        LllResult red = lll_gram(g);
        benchmark::DoNotOptimize(red.gram);
    }
}
BENCHMARK(BM_lll_omega7);

static void BM_snf_ns(benchmark::State& state) {
    Lattice ns = standard_lattice("M_NS" + std::to_string(state.range(0)));
    for (auto _ : state) {
        SnfResult s = snf(ns.gram);
        benchmark::DoNotOptimize(s.d);
    }
}
BENCHMARK(BM_snf_ns)->Arg(3)->Arg(5)->Arg(7);

static void BM_hnf_k3(benchmark::State& state) {
    Lattice k3 = lattice_K3();
    for (auto _ : state) {
        HnfResult h = hnf(k3.gram);
        benchmark::DoNotOptimize(h.h);
    }
}
BENCHMARK(BM_hnf_k3);

static void BM_det_k3(benchmark::State& state) {
    Lattice k3 = lattice_K3();
    for (auto _ : state) {
        Int d = det_exact(k3.gram);
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(BM_det_k3);

static void BM_discriminant_group_omega(benchmark::State& state) {
    Lattice om = lattice_Omega(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        FiniteQuadraticForm f = discriminant_group(om);
        benchmark::DoNotOptimize(f.orders);
    }
}
BENCHMARK(BM_discriminant_group_omega)->Arg(3)->Arg(5)->Arg(7);

BENCHMARK_MAIN();
