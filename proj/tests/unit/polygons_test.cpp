#include <doctest.h>

#include "mellin/errors.hpp"
#include "mellin/newton_polygon.hpp"
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

LocalDiffOp localOp(std::initializer_list<LaurentPolynomial> coeffs) {
    return LocalDiffOp(std::vector<LaurentPolynomial>(coeffs));
}

}  // namespace

TEST_CASE("global polygon of two-point operators") {
    // T - z: one side of slope -1, width 1, height 1.
    const NewtonPolygon a = globalPolygon(
        thetaOp({{0, 1, Rational(1)}, {1, 0, Rational(-1)}}));
    REQUIRE(a.sides().size() == 1);
    CHECK(a.sides()[0].slope == Rational(-1));
    CHECK(a.sides()[0].width == Rational(1));
    CHECK(a.verticalHeight() == 0);
    CHECK(a.height() == Rational(1));

    // z - s: stacked rows give a vertical side of extent 1 and width 0.
    const NewtonPolygon b = globalPolygon(
        thetaOp({{1, 0, Rational(1)}, {0, 0, Rational(-3)}}));
    CHECK(b.sides().empty());
    CHECK(b.verticalHeight() == 1);
    CHECK(b.width() == Rational(0));

    // T - c: a single half-line; no finite sides at all.
    const NewtonPolygon c = globalPolygon(
        thetaOp({{0, 1, Rational(1)}, {0, 0, Rational(-5)}}));
    CHECK(c.sides().empty());
    CHECK(c.verticalHeight() == 0);
    CHECK(c.height() == Rational(0));
    CHECK(c.width() == Rational(0));

    CHECK_THROWS_AS(globalPolygon(DiffOp()), ZeroOperatorError);
}

TEST_CASE("difference polygon reads valuations in the theta view") {
    // -eta - Phi: points (0,-1), (1,0): one side of slope +1.
    DiffnceOp p;
    p.insertTerm(0, 1, Rational(-1));
    p.insertTerm(1, 0, Rational(-1));
    const NewtonPolygon a = differencePolygon(p);
    REQUIRE(a.sides().size() == 1);
    CHECK(a.sides()[0].slope == Rational(1));
    CHECK(a.sides()[0].width == Rational(1));

    // -(eta+1)Phi + (eta+1): both points at height -1: one horizontal side.
    DiffnceOp q;
    q.insertTerm(1, 1, Rational(-1));
    q.insertTerm(1, 0, Rational(-1));
    q.insertTerm(0, 1, Rational(1));
    q.insertTerm(0, 0, Rational(1));
    const NewtonPolygon b = differencePolygon(q);
    REQUIRE(b.sides().size() == 1);
    CHECK(b.sides()[0].slope == Rational(0));
    CHECK(b.sides()[0].width == Rational(1));

    // Phi - s: one horizontal side of width 1.
    DiffnceOp r;
    r.insertTerm(1, 0, Rational(1));
    r.insertTerm(0, 0, Rational(-4));
    const NewtonPolygon c = differencePolygon(r);
    REQUIRE(c.sides().size() == 1);
    CHECK(c.sides()[0].slope == Rational(0));
    CHECK(c.verticalHeight() == 0);
}

TEST_CASE("difference polygon width equals the Phi-degree spread") {
    Rng rng(808);
    for (int trial = 0; trial < 500; ++trial) {
        const DiffnceOp P = test::randomDiffnceOp(rng, 3, 4);
        const NewtonPolygon N = differencePolygon(P);
        CHECK(N.width() == Rational(P.maxPhiDegree() - P.minPhiDegree()));
    }
}

TEST_CASE("local polygon quadrant hull and irregularity") {
    const LaurentPolynomial x = LaurentPolynomial::variable();
    const LaurentPolynomial one(Rational(1));

    // x(xd) - 1: corners (1,1),(0,0): slope 1, irregularity 1.
    const NewtonPolygon a = localDiffPolygon(localOp({-one, x}));
    REQUIRE(a.sides().size() == 1);
    CHECK(a.sides()[0].slope == Rational(1));
    CHECK(a.sides()[0].width == Rational(1));

    // (x+1)(xd) + 1: both valuations 0: horizontal boundary only.
    const NewtonPolygon b = localDiffPolygon(localOp({one, x + one}));
    REQUIRE(b.sides().size() == 1);
    CHECK(b.sides()[0].slope == Rational(0));

    // Constant: a single point.
    const NewtonPolygon c = localDiffPolygon(localOp({one}));
    CHECK(c.sides().empty());

    // Negative minorant sides are inside the quadrant hull and dropped.
    const NewtonPolygon d = localDiffPolygon(
        localOp({LaurentPolynomial::monomial(Rational(5), 5), x}));
    REQUIRE(d.sides().size() == 0);  // corners (0,5),(1,1): slope -4 dropped
    CHECK(d.width() == Rational(0));
}

TEST_CASE("rotateCW turns slope s into -1/s and vertical into horizontal") {
    const NewtonPolygon a = globalPolygon(
        thetaOp({{0, 1, Rational(1)}, {1, 0, Rational(-1)}}));  // slope -1
    const NewtonPolygon ra = rotateCW(a);
    CHECK(ra.kind() == PolygonKind::Difference);
    REQUIRE(ra.sides().size() == 1);
    CHECK(ra.sides()[0].slope == Rational(1));
    CHECK(ra.sides()[0].width == Rational(1));

    const NewtonPolygon b = globalPolygon(
        thetaOp({{1, 0, Rational(1)}, {0, 0, Rational(-2)}}));  // vertical 1
    const NewtonPolygon rb = rotateCW(b);
    REQUIRE(rb.sides().size() == 1);
    CHECK(rb.sides()[0].slope == Rational(0));
    CHECK(rb.sides()[0].width == Rational(1));
    CHECK(rb.verticalHeight() == 0);

    // A single point stays a single point.
    const NewtonPolygon c = globalPolygon(thetaOp({{0, 1, Rational(1)}}));
    CHECK(rotateCW(c).sides().empty());

    CHECK_THROWS_AS(rotateCW(ra), WrongKindError);
}

TEST_CASE("rotation swaps width and height data") {
    Rng rng(909);
    for (int trial = 0; trial < 500; ++trial) {
        const DiffOp P = randomOperator(rng.eng(), OperatorProfile::wide());
        const NewtonPolygon N = globalPolygon(P);
        const NewtonPolygon R = rotateCW(N);
        CHECK(R.width() == N.height());
        CHECK(R.height() == N.width());
    }
}

TEST_CASE("height decomposes over signed sides plus the vertical side") {
    Rng rng(606);
    for (int trial = 0; trial < 500; ++trial) {
        const DiffOp P = randomOperator(rng.eng(), OperatorProfile::wide());
        const NewtonPolygon N = globalPolygon(P);
        Rational total(N.verticalHeight());
        for (const auto& s : N.sides()) total += s.slope.abs() * s.width;
        CHECK(N.height() == total);
    }
}

TEST_CASE("polygon classes are invariant under unit multiples") {
    Rng rng(7070);
    for (int trial = 0; trial < 200; ++trial) {
        const DiffOp P = randomOperator(rng.eng(), OperatorProfile::small());
        // Left multiplication by z and by nonzero scalars.
        CHECK(globalPolygon(P.leftMulZPower(2)) == globalPolygon(P));
        CHECK(globalPolygon(P.scaled(Rational(-3, 2))) == globalPolygon(P));

        const DiffnceOp Q = test::randomDiffnceOp(rng);
        CHECK(differencePolygon(leftMulPhiPower(1, Q)) == differencePolygon(Q));
        CHECK(differencePolygon(Q.scaled(Rational(5, 3))) == differencePolygon(Q));
    }
}

TEST_CASE("horizontal side polynomial collects leading coefficients") {
    // -(eta+1)Phi + (eta+1): p = 1 - t with the single root 1.
    DiffnceOp q;
    q.insertTerm(1, 1, Rational(-1));
    q.insertTerm(1, 0, Rational(-1));
    q.insertTerm(0, 1, Rational(1));
    q.insertTerm(0, 0, Rational(1));
    const auto p = horizontalSidePolynomial(q);
    REQUIRE(p.has_value());
    CHECK(p->coeff(0) == Rational(1));
    CHECK(p->coeff(1) == Rational(-1));
    CHECK(horz(q).roots == std::set<Rational>{Rational(1)});

    // Phi - s: p = t - s.
    DiffnceOp r;
    r.insertTerm(1, 0, Rational(1));
    r.insertTerm(0, 0, Rational(-7));
    const auto pr = horizontalSidePolynomial(r);
    REQUIRE(pr.has_value());
    CHECK(pr->coeff(1) == Rational(1));
    CHECK(pr->coeff(0) == Rational(-7));
    CHECK(horz(r).roots == std::set<Rational>{Rational(7)});

    // -eta - Phi: the only side has slope 1: no horizontal side.
    DiffnceOp s;
    s.insertTerm(0, 1, Rational(-1));
    s.insertTerm(1, 0, Rational(-1));
    CHECK_FALSE(horizontalSidePolynomial(s).has_value());
    CHECK(horz(s).roots.empty());
    CHECK(horz(s).residualDegree == 0);
}
