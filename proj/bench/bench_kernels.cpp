// Serial reference vs OpenMP kernels on covers of the genus-2 surface.

#include <benchmark/benchmark.h>

#include "rgsv/catalog.hpp"
#include "rgsv/chain.hpp"
#include "rgsv/cover.hpp"
#include "rgsv/kernels.hpp"
#include "rgsv/volume.hpp"

using namespace rgsv;

namespace {

struct Fixture {
  GroupModel model;
  std::vector<CosetTable> tables;  // over the edge-path presentation
  std::vector<std::vector<std::vector<Letter>>> spokes;
  std::vector<OrientedTriangulation> covers;
};

const Fixture& fixture() {
  static const Fixture f = [] {
    Fixture f;
    f.model = group_model(catalog_entry("surface:2").triangulation, 1000000);
    auto chain = build_chain(f.model.working(), parse_chain_spec("cyclic:2", 6), Budgets{});
    for (const auto& t : chain.tables) {
      f.tables.push_back(extend_table(t, f.model.simplified.generator_images));
      f.covers.push_back(build_cover(f.model.triangulation, f.model.complex, f.tables.back()).total);
    }
    f.spokes.push_back(spoke_letters(f.model.complex, f.model.triangulation.facets()));
    return f;
  }();
  return f;
}

template <auto Kernel>
void lift(benchmark::State& state) {
  const auto& f = fixture();
  const auto& table = f.tables[static_cast<std::size_t>(state.range(0))];
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(f.model.triangulation.facets(), f.spokes[0], table));
  state.counters["degree"] = table.degree();
}

template <auto Kernel>
void relators(benchmark::State& state) {
  const auto& f = fixture();
  const auto& table = f.tables[static_cast<std::size_t>(state.range(0))];
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(table, f.model.complex.presentation.relators));
}

template <auto Kernel>
void rank(benchmark::State& state) {
  const auto& f = fixture();
  auto m = boundary_matrix(f.covers[static_cast<std::size_t>(state.range(0))], 2);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(m, kernels::kDefaultPrime));
  state.counters["columns"] = static_cast<double>(m.cols);
}

template <auto Kernel>
void boundary_squared(benchmark::State& state) {
  const auto& f = fixture();
  const auto& cover = f.covers[static_cast<std::size_t>(state.range(0))];
  auto d1 = boundary_matrix(cover, 1), d2 = boundary_matrix(cover, 2);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(d1, d2));
}

}  // namespace

BENCHMARK(lift<kernels::serial::lift_facets>)->Name("lift_facets/serial")->DenseRange(4, 6);
BENCHMARK(lift<kernels::parallel::lift_facets>)->Name("lift_facets/parallel")->DenseRange(4, 6);
BENCHMARK(relators<kernels::serial::relators_hold>)->Name("relators_hold/serial")->DenseRange(4, 6);
BENCHMARK(relators<kernels::parallel::relators_hold>)->Name("relators_hold/parallel")->DenseRange(4, 6);
// The dense reference is cubic; keep it to the smaller covers.
BENCHMARK(rank<kernels::serial::rank_mod_p>)->Name("rank_mod_p/serial")->DenseRange(2, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(rank<kernels::parallel::rank_mod_p>)->Name("rank_mod_p/parallel")->DenseRange(2, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(boundary_squared<kernels::serial::composition_vanishes>)->Name("composition_vanishes/serial")->DenseRange(4, 6);
BENCHMARK(boundary_squared<kernels::parallel::composition_vanishes>)->Name("composition_vanishes/parallel")->DenseRange(4, 6);

BENCHMARK_MAIN();
