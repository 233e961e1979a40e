#include <benchmark/benchmark.h>

#include "mellin/mellin_transform.hpp"
#include "mellin/micro_op.hpp"
#include "mellin/operator_expr.hpp"
#include "mellin/stationary_phase.hpp"

namespace {

using namespace mellin;

void BM_SkewProduct(benchmark::State& state) {
    const DiffOp P = randomOperator(11, OperatorProfile::wide());
    const DiffOp Q = randomOperator(12, OperatorProfile::wide());
    for (auto _ : state) benchmark::DoNotOptimize(mulDiffOp(P, Q));
}
BENCHMARK(BM_SkewProduct);

void BM_PresentationRoundTrip(benchmark::State& state) {
    const DiffOp P = randomOperator(13, OperatorProfile::wide());
    for (auto _ : state)
        benchmark::DoNotOptimize(
            convertPresentation(convertPresentation(P, Presentation::D),
                                Presentation::Theta));
}
BENCHMARK(BM_PresentationRoundTrip);

void BM_CheckRotation(benchmark::State& state) {
    const DiffOp P = randomOperator(14, OperatorProfile::wide());
    for (auto _ : state) benchmark::DoNotOptimize(checkRotation(P).equal);
}
BENCHMARK(BM_CheckRotation);

void BM_LocalMellinDim(benchmark::State& state) {
    const DiffOp P = parseToOperator("(z-1)*(z-2)*T^2 + z*T + 1");
    const LocalDiffOp germ = germAt(P, GermPoint::finite(Rational(2)));
    for (auto _ : state)
        benchmark::DoNotOptimize(localMellinDim(germ, GermPoint::finite(Rational(2))));
}
BENCHMARK(BM_LocalMellinDim);

void BM_MicroDivide(benchmark::State& state) {
    const auto tag = DerivationTag::deltaS(Rational(1));
    const LaurentPolynomial u = LaurentPolynomial::variable();
    std::vector<TruncatedSeries> pc{
        TruncatedSeries::fromPolynomial(LaurentPolynomial(Rational(2)), 16),
        TruncatedSeries::fromPolynomial(u, 16),
        TruncatedSeries::fromPolynomial(u * u + u, 16)};
    const MicroOp P(tag, 0, pc);
    std::vector<TruncatedSeries> sc{
        TruncatedSeries::fromPolynomial(u, 16),
        TruncatedSeries::fromPolynomial(u * u, 16),
        TruncatedSeries::fromPolynomial(LaurentPolynomial(Rational(3)), 16),
        TruncatedSeries::fromPolynomial(u + LaurentPolynomial(Rational(1)), 16)};
    const MicroOp S(tag, -1, sc);
    for (auto _ : state) benchmark::DoNotOptimize(microDivide(S, P).quotient.top());
}
BENCHMARK(BM_MicroDivide);

void BM_Verify(benchmark::State& state) {
    const DiffOp P = parseToOperator("(z-1)*(z-2)*T + z");
    for (auto _ : state) benchmark::DoNotOptimize(verify(P).passedForCli());
}
BENCHMARK(BM_Verify);

}  // namespace

BENCHMARK_MAIN();
