#include <benchmark/benchmark.h>

#include <numeric>
#include <vector>

#include "egodyn/measurement.hpp"
#include "egodyn/metrics.hpp"
#include "egodyn/routing.hpp"
#include "egodyn/topology.hpp"

namespace {

std::vector<egodyn::NodeId> first_destinations(std::size_t count) {
  std::vector<egodyn::NodeId> d(count);
  std::iota(d.begin(), d.end(), 1u);
  return d;
}

void BM_GenerateConnected(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(egodyn::generate_connected_graph(n, 3 * n, 7, 20));
  }
}
BENCHMARK(BM_GenerateConnected)->Arg(1000)->Arg(5000);

void BM_RewireStep(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  egodyn::Graph g = egodyn::generate_connected_graph(n, 3 * n, 11, 20);
  egodyn::RandomStream rng(3);
  for (auto _ : state) {
    g = egodyn::rewire_step(g, rng).first;
  }
}
BENCHMARK(BM_RewireStep)->Arg(1000)->Arg(5000);

void BM_RoutingState(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const egodyn::Graph g = egodyn::generate_connected_graph(n, 3 * n, 5, 20);
  const auto dest = first_destinations(100);
  for (auto _ : state) {
    benchmark::DoNotOptimize(egodyn::compute_routing_state(g, dest));
  }
}
BENCHMARK(BM_RoutingState)->Arg(1000)->Arg(5000);

void BM_TracetreeRound(benchmark::State& state) {
  const egodyn::Graph g = egodyn::generate_connected_graph(5000, 15000, 5, 20);
  const auto dest = first_destinations(100);
  const auto routing = egodyn::compute_routing_state(g, dest);
  const auto lbs = egodyn::designate_load_balancers(5000, 0.25, 9);
  std::uint64_t round = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(egodyn::tracetree_round(g, routing, lbs, 0, dest, round, round));
    ++round;
  }
}
BENCHMARK(BM_TracetreeRound);

void BM_ComputeMetrics(benchmark::State& state) {
  egodyn::ExperimentConfig config;
  config.n = 2000;
  config.m = 6000;
  config.rounds = static_cast<std::uint64_t>(state.range(0));
  config.num_destinations = 50;
  config.seed = 1;
  const auto series = egodyn::radar_run(config);
  for (auto _ : state) {
    benchmark::DoNotOptimize(egodyn::compute_metrics(series));
  }
}
BENCHMARK(BM_ComputeMetrics)->Arg(100)->Arg(500);

}  // namespace

BENCHMARK_MAIN();
