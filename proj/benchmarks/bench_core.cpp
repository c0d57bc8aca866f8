#include <benchmark/benchmark.h>

#include "liesym/parser.hpp"
#include "liesym/pde.hpp"
#include "liesym/poly.hpp"
#include "liesym/vector_field.hpp"

using namespace liesym;

namespace {

const char* kModelEquation = "u_t + a*u*u_x + b*u_x3 + c*u_x4 + d*u_x5 - e*u_x2";

void BM_ParseEquation(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(parse_expr(kModelEquation));
  }
}
BENCHMARK(BM_ParseEquation);

void BM_ExpandPower(benchmark::State& state) {
  Expr e = Expr::pow(parse_expr("u + u_x + x*t"), static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(expand(e));
  }
}
BENCHMARK(BM_ExpandPower)->Arg(4)->Arg(8);

void BM_TotalDerivativeChain(benchmark::State& state) {
  Poly p = expand(parse_expr(kModelEquation));
  for (auto _ : state) {
    Poly q = p;
    for (int i = 0; i < 4; ++i) q = total_derivative(q, Direction::X);
    benchmark::DoNotOptimize(q);
  }
}
BENCHMARK(BM_TotalDerivativeChain);

void BM_Prolongation5(benchmark::State& state) {
  VectorField v{parse_expr("x^2*t + u"), parse_expr("t^3"), parse_expr("x*u^2")};
  for (auto _ : state) {
    Prolongation pr(v, 5);
    benchmark::DoNotOptimize(pr.coeff_poly(5, 0));
  }
}
BENCHMARK(BM_Prolongation5);

void BM_ReduceModEquation(benchmark::State& state) {
  EvolutionPDE pde = EvolutionPDE::parse(kModelEquation);
  VectorField v{parse_expr("x^2*t + u"), parse_expr("t^3"), parse_expr("x*u^2")};
  Prolongation pr(v, 5);
  Poly applied = apply_prolonged(pr, pde.delta());
  for (auto _ : state) {
    benchmark::DoNotOptimize(reduce_mod_equation(applied, pde));
  }
}
BENCHMARK(BM_ReduceModEquation);

}  // namespace

BENCHMARK_MAIN();
