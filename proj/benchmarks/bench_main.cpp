#include <benchmark/benchmark.h>

#include <random>

#include "famdirac/json_io.hpp"
#include "famdirac/sl2.hpp"
#include "famdirac/smith.hpp"

using namespace famdirac;

namespace {

LieFamily su21(long n) {
    static const LieFamily base = family_from_json(read_json_file(std::string(FAMDIRAC_DATA_DIR) + "/su21.json"));
    return build_deformation_family(base, n);
}

PolyMatrix random_matrix(std::size_t n, unsigned degree, std::mt19937& rng) {
    std::uniform_int_distribution<int> coef(-3, 3);
    PolyMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<Scalar> c(degree + 1);
            for (auto& x : c) x = Scalar(coef(rng));
            m(i, j) = Poly(c);
        }
    return m;
}

void BM_SmithNormalForm(benchmark::State& state) {
    std::mt19937 rng(1);
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto d = static_cast<unsigned>(state.range(1));
    std::vector<PolyMatrix> ms;
    for (int i = 0; i < 8; ++i) ms.push_back(random_matrix(n, d, rng));
    std::size_t k = 0;
    for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(ms[k++ % ms.size()]));
}
BENCHMARK(BM_SmithNormalForm)->Args({3, 2})->Args({5, 2})->Args({4, 3})->Unit(benchmark::kMicrosecond);

void BM_CasimirPower(benchmark::State& state) {
    const LieFamily g = sl2_family(1);
    const UEElement om = casimir(g);
    for (auto _ : state) {
        PbwRing<Poly> ring(g);
        benchmark::DoNotOptimize(ring.pow(om, static_cast<unsigned>(state.range(0))));
    }
}
BENCHMARK(BM_CasimirPower)->DenseRange(1, 4)->Unit(benchmark::kMicrosecond);

void BM_HarishChandraCubed(benchmark::State& state) {
    const LieFamily g = sl2_family(1);
    const UEElement z = PbwRing<Poly>(g).pow(casimir(g), 3);
    for (auto _ : state) benchmark::DoNotOptimize(hc_homomorphism(z, g));
}
BENCHMARK(BM_HarishChandraCubed)->Unit(benchmark::kMicrosecond);

void BM_DiracSquareSl2(benchmark::State& state) {
    const LieFamily g = sl2_family(state.range(0));
    const QuadraticSpaceFamily q = rescaled_form(g);
    for (auto _ : state) benchmark::DoNotOptimize(dirac_square_check(g, q));
}
BENCHMARK(BM_DiracSquareSl2)->Arg(0)->Arg(1)->Arg(3)->Unit(benchmark::kMicrosecond);

void BM_DiracSquareSu21(benchmark::State& state) {
    const LieFamily g = su21(state.range(0));
    const QuadraticSpaceFamily q = rescaled_form(g);
    for (auto _ : state) benchmark::DoNotOptimize(dirac_square_check(g, q));
}
BENCHMARK(BM_DiracSquareSu21)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_DiracCohomology(benchmark::State& state) {
    const LieFamily g = sl2_family(1);
    const QuadraticSpaceFamily q = rescaled_form(g);
    const LadderModule v = make_ladder(LadderKind::finite, state.range(0));
    const WeightWindow w = default_window(v);
    for (auto _ : state) benchmark::DoNotOptimize(dirac_cohomology(v, g, q, w));
}
BENCHMARK(BM_DiracCohomology)->Arg(1)->Arg(5)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_VermaReport(benchmark::State& state) {
    const LieFamily g = sl2_family(1);
    for (auto _ : state) benchmark::DoNotOptimize(verma_report(g, {Poly(5)}, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_VermaReport)->Arg(4)->Arg(8)->Unit(benchmark::kMicrosecond);

void BM_PbwAssociativitySu21(benchmark::State& state) {
    const LieFamily g = su21(1);
    std::mt19937 rng(5);
    std::uniform_int_distribution<std::size_t> gen(0, g.dim() - 1);
    auto rnd = [&] {
        std::vector<unsigned> e(g.dim(), 0);
        for (int d = 0; d < state.range(0); ++d) ++e[gen(rng)];
        return ue_from_exponents(g, e, Poly(1));
    };
    const UEElement a = rnd(), b = rnd(), c = rnd();
    for (auto _ : state) {
        PbwRing<Poly> ring(g);
        benchmark::DoNotOptimize(ring.mul(ring.mul(a, b), c));
    }
}
BENCHMARK(BM_PbwAssociativitySu21)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
