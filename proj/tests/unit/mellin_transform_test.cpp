#include <doctest.h>

#include "mellin/errors.hpp"
#include "mellin/germs.hpp"
#include "mellin/mellin_transform.hpp"
#include "mellin/stationary_phase.hpp"
#include "support/generators.hpp"

using namespace mellin;
using test::Rng;

namespace {

DiffOp thetaOp(std::initializer_list<std::tuple<int, int, Rational>> terms) {
    DiffOp op(Presentation::Theta);
    for (const auto& [r, j, c] : terms) op.insertTerm(r, j, c);
    return op;
}

DiffnceOp diffnce(std::initializer_list<std::tuple<int, int, Rational>> terms) {
    DiffnceOp op;
    for (const auto& [i, e, c] : terms) op.insertTerm(i, e, c);
    return op;
}

}  // namespace

TEST_CASE("mellin substitutes z -> Phi and T -> -eta") {
    // T - z -> -eta - Phi
    CHECK(mellin::mellin(thetaOp({{0, 1, Rational(1)}, {1, 0, Rational(-1)}})) ==
          diffnce({{0, 1, Rational(-1)}, {1, 0, Rational(-1)}}));

    // (z-1)T + 1 -> -(eta+1)Phi + (eta+1)
    CHECK(mellin::mellin(thetaOp({{1, 1, Rational(1)}, {0, 1, Rational(-1)}, {0, 0, Rational(1)}})) ==
          diffnce({{1, 1, Rational(-1)},
                   {1, 0, Rational(-1)},
                   {0, 1, Rational(1)},
                   {0, 0, Rational(1)}}));

    // z - s -> Phi - s
    CHECK(mellin::mellin(thetaOp({{1, 0, Rational(1)}, {0, 0, Rational(-3)}})) ==
          diffnce({{1, 0, Rational(1)}, {0, 0, Rational(-3)}}));

    CHECK_THROWS_AS(mellin::mellin(DiffOp()), ZeroOperatorError);
}

TEST_CASE("mellin is a ring homomorphism") {
    Rng rng(515151);
    for (int trial = 0; trial < 500; ++trial) {
        const DiffOp P = randomOperator(rng.eng(), OperatorProfile::small());
        const DiffOp Q = randomOperator(rng.eng(), OperatorProfile::small());
        CHECK(mellin::mellin(mulDiffOp(P, Q)) == mulDiffnceOp(mellin::mellin(P), mellin::mellin(Q)));
    }
}

TEST_CASE("germAtInfinityOp normalizes the minimal Phi-degree to zero") {
    // -eta - Phi^-1: multiplying by Phi gives -(eta+1)Phi - 1.
    const DiffnceOp N = diffnce({{0, 1, Rational(-1)}, {-1, 0, Rational(-1)}});
    CHECK(germAtInfinityOp(N) ==
          diffnce({{1, 1, Rational(-1)}, {1, 0, Rational(-1)}, {0, 0, Rational(-1)}}));

    // Already at minimal degree 0: unchanged.
    const DiffnceOp M = diffnce({{0, 1, Rational(-1)}, {1, 0, Rational(-1)}});
    CHECK(germAtInfinityOp(M) == M);

    // A pure Phi-power is a unit.
    CHECK(germAtInfinityOp(diffnce({{2, 0, Rational(1)}})) ==
          DiffnceOp::constant(Rational(1)));
}

TEST_CASE("checkRotation agrees on the worked examples") {
    // T - z: one side slope +1 width 1 on both sides of the check.
    auto rc = checkRotation(thetaOp({{0, 1, Rational(1)}, {1, 0, Rational(-1)}}));
    CHECK(rc.equal);
    REQUIRE(rc.lhs.sides().size() == 1);
    CHECK(rc.lhs.sides()[0].slope == Rational(1));

    // T - z^-1: one side slope -1 width 1.
    rc = checkRotation(thetaOp({{0, 1, Rational(1)}, {-1, 0, Rational(-1)}}));
    CHECK(rc.equal);
    REQUIRE(rc.lhs.sides().size() == 1);
    CHECK(rc.lhs.sides()[0].slope == Rational(-1));
    CHECK(rc.lhs.sides()[0].width == Rational(1));

    // (z-1)T + 1: one horizontal side width 1.
    rc = checkRotation(
        thetaOp({{1, 1, Rational(1)}, {0, 1, Rational(-1)}, {0, 0, Rational(1)}}));
    CHECK(rc.equal);
    REQUIRE(rc.lhs.sides().size() == 1);
    CHECK(rc.lhs.sides()[0].slope == Rational(0));
}

TEST_CASE("rotation identity holds exactly on a random corpus") {
    Rng rng(606060);
    for (int trial = 0; trial < 500; ++trial) {
        const DiffOp P = randomOperator(rng.eng(), OperatorProfile::wide());
        CHECK(checkRotation(P).equal);
    }
}

TEST_CASE("slope-sign widths match the local irregularities") {
    Rng rng(717171);
    for (int trial = 0; trial < 300; ++trial) {
        const DiffOp P = randomOperator(rng.eng(), OperatorProfile::small());
        const NewtonPolygon N =
            differencePolygon(germAtInfinityOp(mellin::mellin(P)), ValuationView::Theta);
        const int irr0 = invariants(germAt(P, GermPoint::zero()), GermPoint::zero()).irr;
        const int irrInf =
            invariants(germAt(P, GermPoint::infinity()), GermPoint::infinity()).irr;
        CHECK(N.widthOfSign(-1) == Rational(irr0));
        CHECK(N.widthOfSign(1) == Rational(irrInf));
        CHECK(N.widthOfSign(0) == Rational(globalPolygon(P).verticalHeight()));
    }
}
