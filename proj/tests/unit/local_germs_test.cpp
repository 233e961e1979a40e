#include <doctest.h>

#include "mellin/errors.hpp"
#include "mellin/germs.hpp"
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

}  // namespace

TEST_CASE("germAt produces normalized presentations at all three point kinds") {
    // T - z^-1 at 0: a1 = z, a0 = -1 after clearing the valuation.
    const DiffOp P = thetaOp({{0, 1, Rational(1)}, {-1, 0, Rational(-1)}});
    const LocalDiffOp g0 = germAt(P, GermPoint::zero());
    CHECK(g0.coeff(1) == LaurentPolynomial::variable());
    CHECK(g0.coeff(0) == LaurentPolynomial(Rational(-1)));

    // (z-1)T + 1 at 1: a1 = x+1, a0 = 1.
    const DiffOp Q =
        thetaOp({{1, 1, Rational(1)}, {0, 1, Rational(-1)}, {0, 0, Rational(1)}});
    const LocalDiffOp g1 = germAt(Q, GermPoint::finite(Rational(1)));
    LaurentPolynomial xPlus1 = LaurentPolynomial::variable();
    xPlus1.insertTerm(0, Rational(1));
    CHECK(g1.coeff(1) == xPlus1);
    CHECK(g1.coeff(0) == LaurentPolynomial(Rational(1)));

    // T at infinity: -(ydy), normalized a1 = -1.
    const LocalDiffOp gInf = germAt(DiffOp::term(Rational(1), 0, 1), GermPoint::infinity());
    CHECK(gInf.degree() == 1);
    CHECK(gInf.coeff(1) == LaurentPolynomial(Rational(-1)));

    CHECK_THROWS_AS(germAt(Q, GermPoint::finite(Rational(0))), Error);
}

TEST_CASE("invariants read dim, irr and mu off the presentation") {
    const LaurentPolynomial x = LaurentPolynomial::variable();
    const LaurentPolynomial one(Rational(1));

    const GermReport a = invariants(
        LocalDiffOp({-one, x}), GermPoint::zero());  // x(xd) - 1
    CHECK(a.dim == 1);
    CHECK(a.irr == 1);
    CHECK(a.mu == 2);
    REQUIRE(a.slopes.size() == 1);
    CHECK(a.slopes[0].slope == Rational(1));

    const GermReport b = invariants(LocalDiffOp({one, x + one}), GermPoint::zero());
    CHECK(b.dim == 1);
    CHECK(b.irr == 0);
    CHECK(b.mu == 1);
    CHECK(b.slopes.empty());

    const GermReport c = invariants(LocalDiffOp({LaurentPolynomial(Rational(5))}),
                                    GermPoint::zero());
    CHECK(c.dim == 0);
    CHECK(c.irr == 0);
    CHECK(c.mu == 0);

    CHECK_THROWS_AS(invariants(LocalDiffOp(), GermPoint::zero()), ZeroOperatorError);
}

TEST_CASE("mu equals dim plus irr on random germs") {
    Rng rng(11);
    for (int trial = 0; trial < 500; ++trial) {
        const LocalDiffOp L = test::randomLocalDiffOp(rng);
        const GermReport r = invariants(L, GermPoint::zero());
        CHECK(r.mu == r.dim + r.irr);
    }
}

TEST_CASE("singularPoints reads nonzero rational roots of the leading coefficient") {
    const DiffOp P =
        thetaOp({{1, 1, Rational(1)}, {0, 1, Rational(-1)}, {0, 0, Rational(1)}});
    auto sp = singularPoints(P);
    CHECK(sp.points == std::set<Rational>{Rational(1)});
    CHECK(sp.nonRationalResidualDegree == 0);

    // Unit leading coefficient: no candidates.
    sp = singularPoints(thetaOp({{0, 1, Rational(1)}, {1, 0, Rational(-1)}}));
    CHECK(sp.points.empty());
    CHECK(sp.nonRationalResidualDegree == 0);

    // (z^2+1)T + z: no rational roots, residual degree 2.
    sp = singularPoints(
        thetaOp({{2, 1, Rational(1)}, {0, 1, Rational(1)}, {1, 0, Rational(1)}}));
    CHECK(sp.points.empty());
    CHECK(sp.nonRationalResidualDegree == 2);
}

TEST_CASE("unit leading coefficient forces the two-point height formula") {
    Rng rng(2222);
    for (int trial = 0; trial < 300; ++trial) {
        const DiffOp P = randomOperator(rng.eng(), OperatorProfile::regular());
        CHECK(singularPoints(P).points.empty());
        const Rational h = globalPolygon(P).height();
        const int irr0 = invariants(germAt(P, GermPoint::zero()), GermPoint::zero()).irr;
        const int irrInf =
            invariants(germAt(P, GermPoint::infinity()), GermPoint::infinity()).irr;
        CHECK(h == Rational(irr0 + irrInf));
    }
}

TEST_CASE("finite germ invariants ignore unit multiples of the operator") {
    Rng rng(333);
    for (int trial = 0; trial < 100; ++trial) {
        const DiffOp P = randomOperator(rng.eng(), OperatorProfile::small());
        const GermPoint pt = GermPoint::finite(Rational(rng.i(1, 3)));
        const GermReport base = invariants(germAt(P, pt), pt);
        const GermReport shifted = invariants(germAt(P.leftMulZPower(2), pt), pt);
        const GermReport scaled = invariants(germAt(P.scaled(Rational(-5, 2)), pt), pt);
        CHECK(base.dim == shifted.dim);
        CHECK(base.irr == shifted.irr);
        CHECK(base.mu == shifted.mu);
        CHECK(base.dim == scaled.dim);
        CHECK(base.irr == scaled.irr);
        CHECK(base.mu == scaled.mu);
    }
}
