#include <benchmark/benchmark.h>

#include "witt/analysis.hpp"

using namespace witt;

namespace {

ExecPolicy policy_arg(const benchmark::State& state) {
  return state.range(0) == 0 ? ExecPolicy::serial : ExecPolicy::parallel;
}

void label(benchmark::State& state) { state.SetLabel(state.range(0) == 0 ? "serial" : "parallel"); }

// Each kernel also checks that the parallel report matches the serial one.
template <class F>
void run_kernel(benchmark::State& state, F kernel) {
  const std::string reference = kernel(ExecPolicy::serial).dump();
  for (auto _ : state) {
    const Report r = kernel(policy_arg(state));
    benchmark::DoNotOptimize(r.verdict);
    if (r.dump() != reference) {
      state.SkipWithError("parallel report differs from the serial reference");
      break;
    }
  }
  label(state);
}

void BM_SymbolicBrackets(benchmark::State& state) {
  run_kernel(state, [](ExecPolicy p) { return verify_sl3_brackets(Sl3Params::symbolic(), 2, 1, p); });
}

void BM_Generation(benchmark::State& state) {
  run_kernel(state, [](ExecPolicy p) {
    return check_generation(Sl3Params::desk(), BasisKey{0, Lattice{0, 0}}, Window::centered(4, 4, 4, 2), p);
  });
}

void BM_IrreducibleSample(benchmark::State& state) {
  const Window w = Window::centered(3, 3, 3, 1);
  std::vector<ModuleElement> sample;
  for (const auto& k : w.inner_keys()) {
    if (k.r[0] == 0) sample.push_back(ModuleElement::basis(k.index, k.r));
  }
  run_kernel(state, [&](ExecPolicy p) { return check_irreducible_generic(Sl3Params::desk(), w, sample, p); });
}

void BM_CentralC32(benchmark::State& state) {
  run_kernel(state,
             [](ExecPolicy p) { return gt_central_check(2, Sl3Params::symbolic(), Window::centered(3, 2, 2, 2), p); });
}

}  // namespace

BENCHMARK(BM_SymbolicBrackets)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Generation)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IrreducibleSample)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CentralC32)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
