#include <benchmark/benchmark.h>

#include "archfe/gamma.hpp"
#include "archfe/numberfield.hpp"
#include "archfe/oracle.hpp"
#include "archfe/scheme.hpp"

using namespace archfe;

namespace {

SchemeHodgeData k3_type() {
  SchemeHodgeData x;
  x.name = "K3";
  x.d = 3;
  x.cohomology.emplace(0, RHodgeStructure(0).add(SimplePiece::mid(0, Eps::Plus)));
  RHodgeStructure h2(2);
  h2.add(SimplePiece::pq(0, 2)).add(SimplePiece::mid(1, Eps::Plus), 11).add(SimplePiece::mid(1, Eps::Minus), 9);
  x.cohomology.emplace(2, h2);
  x.cohomology.emplace(4, RHodgeStructure(4).add(SimplePiece::mid(2, Eps::Plus)));
  return x;
}

void BM_ZetaLeading(benchmark::State& state) {
  const auto x = k3_type();
  const auto n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(zeta_infty_leading(x, n));
}
BENCHMARK(BM_ZetaLeading)->Arg(-5)->Arg(1)->Arg(8);

void BM_CorrectionFactor(benchmark::State& state) {
  const auto x = k3_type();
  const auto n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(correction_factor(x, n));
}
BENCHMARK(BM_CorrectionFactor)->Arg(4)->Arg(20)->Arg(80);

void BM_AuditExact(benchmark::State& state) {
  const auto x = k3_type();
  AuditOptions options;
  options.oracle = false;
  for (auto _ : state) benchmark::DoNotOptimize(audit(x, 2, options));
}
BENCHMARK(BM_AuditExact);

void BM_GammaNumeric(benchmark::State& state) {
  const auto prec = static_cast<mpfr_prec_t>(state.range(0));
  const oracle::BigFloat z(Rational(7, 3), prec);
  for (auto _ : state) benchmark::DoNotOptimize(oracle::gamma_numeric(z, prec));
}
BENCHMARK(BM_GammaNumeric)->Arg(64)->Arg(256)->Arg(1024);

void BM_LeadingCheck(benchmark::State& state) {
  const auto x = k3_type();
  const auto factors = zeta_infty_factors(x);
  const auto lt = zeta_infty_leading(x, -2);
  for (auto _ : state) benchmark::DoNotOptimize(oracle::leading_check(factors, -2, lt, 256));
}
BENCHMARK(BM_LeadingCheck);

void BM_Discriminant(benchmark::State& state) {
  std::vector<Integer> c(static_cast<std::size_t>(state.range(0)) + 1, Integer(0));
  c.front() = -1;
  c[1] = -1;
  c.back() = 1;
  const IntPolynomial f(c);
  for (auto _ : state) benchmark::DoNotOptimize(discriminant(f));
}
BENCHMARK(BM_Discriminant)->Arg(5)->Arg(12)->Arg(24);

void BM_Signature(benchmark::State& state) {
  std::vector<Integer> c(static_cast<std::size_t>(state.range(0)) + 1, Integer(0));
  c.front() = -1;
  c[1] = -1;
  c.back() = 1;
  const IntPolynomial f(c);
  for (auto _ : state) benchmark::DoNotOptimize(signature(f));
}
BENCHMARK(BM_Signature)->Arg(5)->Arg(12)->Arg(24);

}  // namespace

BENCHMARK_MAIN();
