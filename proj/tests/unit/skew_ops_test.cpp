#include <doctest.h>

#include "mellin/diff_op.hpp"
#include "mellin/diffnce_op.hpp"
#include "mellin/errors.hpp"
#include "mellin/local_diff_op.hpp"
#include "mellin/stationary_phase.hpp"
#include "support/generators.hpp"
#include "support/monomial_action.hpp"

using namespace mellin;
using test::Rng;

namespace {

DiffOp thetaOp(std::initializer_list<std::tuple<int, int, Rational>> terms) {
    DiffOp op(Presentation::Theta);
    for (const auto& [r, j, c] : terms) op.insertTerm(r, j, c);
    return op;
}

LaurentPolynomial poly(std::initializer_list<std::pair<int, Rational>> terms) {
    LaurentPolynomial p;
    for (const auto& [e, c] : terms) p.insertTerm(e, c);
    return p;
}

}  // namespace

TEST_CASE("T-form products reorder through T z = z (T + 1)") {
    const DiffOp T = DiffOp::term(Rational(1), 0, 1);
    const DiffOp z = DiffOp::term(Rational(1), 1, 0);

    // T * z = z*T + z
    CHECK(mulDiffOp(T, z) == thetaOp({{1, 1, Rational(1)}, {1, 0, Rational(1)}}));
    // z * T is already normal-ordered
    CHECK(mulDiffOp(z, T) == thetaOp({{1, 1, Rational(1)}}));
}

TEST_CASE("D-form products follow the Leibniz rule") {
    const DiffOp del = DiffOp::term(Rational(1), 0, 1, Presentation::D);
    const DiffOp z2 = DiffOp::term(Rational(1), 2, 0, Presentation::D);
    // d * z^2 = z^2 d + 2z
    DiffOp expected(Presentation::D);
    expected.insertTerm(2, 1, Rational(1));
    expected.insertTerm(1, 0, Rational(2));
    CHECK(mulDiffOp(del, z2) == expected);
}

TEST_CASE("presentation conversion uses Stirling expansions both ways") {
    // T^2 = z d + z^2 d^2
    const DiffOp T2 = DiffOp::term(Rational(1), 0, 2);
    DiffOp expectedD(Presentation::D);
    expectedD.insertTerm(1, 1, Rational(1));
    expectedD.insertTerm(2, 2, Rational(1));
    CHECK(convertPresentation(T2, Presentation::D) == expectedD);

    // z^2 d^2 = T(T-1) = T^2 - T
    const DiffOp z2d2 = DiffOp::term(Rational(1), 2, 2, Presentation::D);
    CHECK(convertPresentation(z2d2, Presentation::Theta) ==
          thetaOp({{0, 2, Rational(1)}, {0, 1, Rational(-1)}}));

    // z converts to itself
    const DiffOp z = DiffOp::term(Rational(1), 1, 0);
    CHECK(convertPresentation(convertPresentation(z, Presentation::D),
                              Presentation::Theta) == z);
}

TEST_CASE("monomial-action oracle validates products and conversions") {
    Rng rng(99);
    int cases = 0;
    while (cases < 500) {
        const OperatorProfile profile = OperatorProfile::small();
        const DiffOp P = randomOperator(rng.eng(), profile);
        const DiffOp Q = randomOperator(rng.eng(), profile);
        for (const Presentation pres : {Presentation::Theta, Presentation::D}) {
            const DiffOp Pp = convertPresentation(P, pres);
            const DiffOp Qp = convertPresentation(Q, pres);
            const DiffOp prod = mulDiffOp(Pp, Qp);
            for (int k = -3; k <= 3; ++k)
                CHECK(test::actOnMonomial(prod, k) == test::actComposed(Pp, Qp, k));
            // Conversion preserves the action.
            const DiffOp other = convertPresentation(
                Pp, pres == Presentation::Theta ? Presentation::D : Presentation::Theta);
            for (int k = -3; k <= 3; ++k)
                CHECK(test::actOnMonomial(other, k) == test::actOnMonomial(Pp, k));
            ++cases;
        }
    }
}

TEST_CASE("conversion round-trips and products associate") {
    Rng rng(1234);
    for (int trial = 0; trial < 200; ++trial) {
        const DiffOp P = randomOperator(rng.eng(), OperatorProfile::small());
        const DiffOp back = convertPresentation(
            convertPresentation(P, Presentation::D), Presentation::Theta);
        CHECK(back == P);

        const DiffOp Q = randomOperator(rng.eng(), OperatorProfile::small());
        const DiffOp R = randomOperator(rng.eng(), OperatorProfile::small());
        CHECK(mulDiffOp(mulDiffOp(P, Q), R) == mulDiffOp(P, mulDiffOp(Q, R)));
    }
}

TEST_CASE("difference products respect the bracket [Phi, eta] = Phi") {
    const DiffnceOp phi = DiffnceOp::term(Rational(1), 1, 0);
    const DiffnceOp phiInv = DiffnceOp::term(Rational(1), -1, 0);
    const DiffnceOp eta = DiffnceOp::term(Rational(1), 0, 1);

    // Phi * eta = (eta + 1) Phi
    DiffnceOp expected;
    expected.insertTerm(1, 1, Rational(1));
    expected.insertTerm(1, 0, Rational(1));
    CHECK(mulDiffnceOp(phi, eta) == expected);

    // Phi^-1 * eta = (eta - 1) Phi^-1
    DiffnceOp expectedInv;
    expectedInv.insertTerm(-1, 1, Rational(1));
    expectedInv.insertTerm(-1, 0, Rational(-1));
    CHECK(mulDiffnceOp(phiInv, eta) == expectedInv);

    // eta * Phi is already normal-ordered; Phi Phi^-1 = 1.
    CHECK(mulDiffnceOp(eta, phi) == DiffnceOp::term(Rational(1), 1, 1));
    CHECK(mulDiffnceOp(phi, phiInv) == DiffnceOp::constant(Rational(1)));
    CHECK(mulDiffnceOp(phiInv, phi) == DiffnceOp::constant(Rational(1)));
}

TEST_CASE("difference products agree with the shift action and associate") {
    Rng rng(321);
    for (int trial = 0; trial < 300; ++trial) {
        const DiffnceOp P = test::randomDiffnceOp(rng);
        const DiffnceOp Q = test::randomDiffnceOp(rng);
        const DiffnceOp prod = mulDiffnceOp(P, Q);
        for (int m = 0; m <= 3; ++m) {
            const LaurentPolynomial f = LaurentPolynomial::monomial(Rational(1), m);
            CHECK(test::actOnEtaPoly(prod, f) == test::actComposedEta(P, Q, f));
        }
        const DiffnceOp R = test::randomDiffnceOp(rng);
        CHECK(mulDiffnceOp(mulDiffnceOp(P, Q), R) == mulDiffnceOp(P, mulDiffnceOp(Q, R)));
    }
}

TEST_CASE("translateOp produces the exact germ presentation") {
    // (z-1)T + 1 at s=1: a1 = x+1, a0 = 1.
    const DiffOp P = thetaOp({{1, 1, Rational(1)}, {0, 1, Rational(-1)}, {0, 0, Rational(1)}});
    const LocalDiffOp germ = translateOp(P, Rational(1));
    CHECK(germ.degree() == 1);
    CHECK(germ.coeff(1) == poly({{1, Rational(1)}, {0, Rational(1)}}));
    CHECK(germ.coeff(0) == LaurentPolynomial(Rational(1)));

    // T at s=2: a1 has x-valuation 0.
    const LocalDiffOp euler = translateOp(DiffOp::term(Rational(1), 0, 1), Rational(2));
    CHECK(euler.degree() == 1);
    CHECK(euler.coeff(1).valuation() == 0);

    // Constants translate to themselves.
    const LocalDiffOp c = translateOp(DiffOp::constant(Rational(1)), Rational(7));
    CHECK(c.degree() == 0);
    CHECK(c.coeff(0) == LaurentPolynomial(Rational(1)));

    CHECK_THROWS_AS(translateOp(DiffOp(), Rational(1)), ZeroOperatorError);
    CHECK_THROWS_AS(translateOp(P, Rational(0)), Error);
}

TEST_CASE("translateOp clears poles by a unit before substituting") {
    // T - z^-1 at s = 1 stays polynomial all the way through.
    const DiffOp P = thetaOp({{0, 1, Rational(1)}, {-1, 0, Rational(-1)}});
    const LocalDiffOp germ = translateOp(P, Rational(1));
    CHECK(germ.isNormalized());
    for (int i = 0; i <= germ.degree(); ++i)
        if (!germ.coeff(i).isZero()) CHECK(germ.coeff(i).valuation() >= 0);
}

TEST_CASE("invertCoordinate maps z^r T^j to (-1)^j y^-r (ydy)^j") {
    // T - z: -(ydy) - y^-1, normalized to -y(ydy) - 1.
    const DiffOp P = thetaOp({{0, 1, Rational(1)}, {1, 0, Rational(-1)}});
    const LocalDiffOp germ = invertCoordinate(P);
    CHECK(germ.degree() == 1);
    CHECK(germ.coeff(1) == LaurentPolynomial::monomial(Rational(-1), 1));
    CHECK(germ.coeff(0) == LaurentPolynomial(Rational(-1)));

    // z alone is a unit: germ is the constant 1.
    const LocalDiffOp unit = invertCoordinate(DiffOp::term(Rational(1), 1, 0));
    CHECK(unit.degree() == 0);
    CHECK(unit.coeff(0) == LaurentPolynomial(Rational(1)));

    // T - z^-1: -(ydy) - y, already normalized.
    const DiffOp Q = thetaOp({{0, 1, Rational(1)}, {-1, 0, Rational(-1)}});
    const LocalDiffOp g2 = invertCoordinate(Q);
    CHECK(g2.coeff(1) == LaurentPolynomial(Rational(-1)));
    CHECK(g2.coeff(0) == LaurentPolynomial::monomial(Rational(-1), 1));
}
