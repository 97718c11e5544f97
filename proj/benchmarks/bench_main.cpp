#include <benchmark/benchmark.h>

#include "godel/elimination.hpp"
#include "godel/first_order.hpp"
#include "godel/parser.hpp"

using namespace godel;

namespace {

const Formula kTwoVar = parse("(A -> B) -> B");
const Formula kDeltaMix = parse("(a | D(a | ~a)) & (D(b) -> (a -> b))");

void BM_eval(benchmark::State& state) {
  Interpretation interp{{{"a", 2}, {"b", 1}}, TruthScale(4), false};
  for (auto _ : state) benchmark::DoNotOptimize(eval(kDeltaMix, interp));
}
BENCHMARK(BM_eval);

void BM_is_valid_two_atoms(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(is_valid(kDeltaMix, Mode::restricted).valid);
}
BENCHMARK(BM_is_valid_two_atoms);

void BM_enumerate_chains(benchmark::State& state) {
  std::vector<std::string> vars;
  for (int i = 0; i < state.range(0); ++i)
    vars.push_back(std::string(1, static_cast<char>('a' + i)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_chains(vars).size());
}
BENCHMARK(BM_enumerate_chains)->Arg(2)->Arg(3)->Arg(4);

void BM_chain_normal_form(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(
        chain_normal_form(kTwoVar, Mode::standard).disjuncts.size());
}
BENCHMARK(BM_chain_normal_form);

void BM_eliminate_delta(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(eliminate_delta(kDeltaMix));
}
BENCHMARK(BM_eliminate_delta);

void BM_bounded_fo_search(benchmark::State& state) {
  Formula f = parse("exists x. P(x) -> (forall y. P(y))", Syntax::first_order);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        is_valid_fo_bounded(f, SearchBounds{2, 3}).countermodel_found);
}
BENCHMARK(BM_bounded_fo_search);

}  // namespace

BENCHMARK_MAIN();
