#include <doctest.h>

#include "mellin/errors.hpp"
#include "mellin/micro_op.hpp"
#include "support/generators.hpp"

using namespace mellin;
using test::Rng;

namespace {

TruncatedSeries uPow(int e, const Rational& c = Rational(1)) {
    return TruncatedSeries::fromPolynomial(LaurentPolynomial::monomial(c, e));
}

// Random operator with levels in [top-depth+1, top] and truncated series
// coefficients.
MicroOp randomMicro(Rng& rng, DerivationTag tag, int top, int depth, int prec) {
    std::vector<TruncatedSeries> coeffs;
    for (int k = 0; k < depth; ++k)
        coeffs.push_back(test::randomSeries(rng, rng.i(-1, 2), 3, prec));
    return MicroOp(tag, top - depth + 1, std::move(coeffs));
}

void checkAgreeOnCommonWindow(const MicroOp& a, const MicroOp& b) {
    const int lo = std::max(a.bottom(), b.bottom());
    const int hi = std::max(a.top(), b.top());
    for (int level = lo; level <= hi; ++level) {
        const TruncatedSeries& x = a.coeffAt(level);
        const TruncatedSeries& y = b.coeffAt(level);
        const int p = std::min(x.precision(), y.precision());
        CAPTURE(level);
        CHECK(x.equalUpTo(y, p));
    }
}

}  // namespace

TEST_CASE("twisted product reproduces the defining examples") {
    const auto tag0 = DerivationTag::deltaS(Rational(0));
    const auto tagInf = DerivationTag::deltaInf();

    // eta o u under delta_0: u*eta - u.
    const MicroOp eta = MicroOp::fromSeries(tag0, uPow(0), 1, -3);
    const MicroOp u = MicroOp::fromSeries(tag0, uPow(1), 0, -3);
    const MicroOp prod = microProduct(eta, u);
    CHECK(prod.coeffAt(1).coeff(1) == Rational(1));
    CHECK(prod.coeffAt(0).coeff(1) == Rational(-1));

    // eta o u under delta_inf: u*eta + u.
    const MicroOp etaI = MicroOp::fromSeries(tagInf, uPow(0), 1, -3);
    const MicroOp uI = MicroOp::fromSeries(tagInf, uPow(1), 0, -3);
    const MicroOp prodI = microProduct(etaI, uI);
    CHECK(prodI.coeffAt(1).coeff(1) == Rational(1));
    CHECK(prodI.coeffAt(0).coeff(1) == Rational(1));

    CHECK_THROWS_AS(microProduct(eta, uI), TagMismatchError);
}

TEST_CASE("the unit is neutral on both sides") {
    Rng rng(4242);
    const auto tag = DerivationTag::deltaS(Rational(2));
    const MicroOp one = MicroOp::fromSeries(tag, uPow(0), 0, -5);
    for (int trial = 0; trial < 50; ++trial) {
        const MicroOp Q = randomMicro(rng, tag, rng.i(-1, 2), 4, 12);
        checkAgreeOnCommonWindow(microProduct(one, Q), Q);
        checkAgreeOnCommonWindow(microProduct(Q, one), Q);
    }
}

TEST_CASE("generator bracket realizes the image of [xd, x] = x") {
    // eta o u - u o eta = -u under delta_0.
    const auto tag0 = DerivationTag::deltaS(Rational(0));
    const MicroOp eta = MicroOp::fromSeries(tag0, uPow(0), 1, -3);
    const MicroOp u = MicroOp::fromSeries(tag0, uPow(1), 0, -3);
    const MicroOp bracket = microProduct(eta, u) - microProduct(u, eta);
    CHECK(bracket.coeffAt(1).isZeroUpToPrecision());
    CHECK(bracket.coeffAt(0).coeff(1) == Rational(-1));
}

TEST_CASE("twisted product is associative up to truncation") {
    Rng rng(10101);
    for (const auto& tag :
         {DerivationTag::deltaS(Rational(0)), DerivationTag::deltaS(Rational(-2)),
          DerivationTag::deltaInf()}) {
        for (int trial = 0; trial < 40; ++trial) {
            const MicroOp A = randomMicro(rng, tag, rng.i(0, 1), 3, 14);
            const MicroOp B = randomMicro(rng, tag, rng.i(0, 1), 3, 14);
            const MicroOp C = randomMicro(rng, tag, rng.i(0, 1), 3, 14);
            checkAgreeOnCommonWindow(microProduct(microProduct(A, B), C),
                                     microProduct(A, microProduct(B, C)));
        }
    }
}

TEST_CASE("division by the operator itself and by eta") {
    const auto tag = DerivationTag::deltaS(Rational(0));

    // S = P: Q = 1, R = 0.
    Rng rng(31415);
    const MicroOp P = randomMicro(rng, tag, 1, 3, 16);
    const auto [q, r] = microDivide(P, P);
    CHECK(q.coeffAt(0).coeff(0) == Rational(1));
    CHECK(r.isZeroUpToTruncation());

    // S = 1, P = eta (valuation 0 forces R = 0); multiply back to 1.
    const MicroOp one = MicroOp::fromSeries(tag, uPow(0), 0, -4);
    const MicroOp eta = MicroOp::fromSeries(tag, uPow(0), 1, -4);
    const auto [qe, re] = microDivide(one, eta);
    CHECK(re.isZeroUpToTruncation());
    const MicroOp back = microProduct(qe, eta);
    checkAgreeOnCommonWindow(back, one);
}

TEST_CASE("division reconstructs and shapes the remainder") {
    Rng rng(2718);
    for (const auto& tag :
         {DerivationTag::deltaS(Rational(0)), DerivationTag::deltaS(Rational(1)),
          DerivationTag::deltaInf()}) {
        for (int trial = 0; trial < 40; ++trial) {
            const int v = rng.i(0, 2);
            // Divisor with leading coefficient of u-valuation exactly v.
            std::vector<TruncatedSeries> pc;
            const int pDepth = 4;
            for (int k = 0; k < pDepth - 1; ++k)
                pc.push_back(test::randomSeries(rng, rng.i(0, 2), 2, 16));
            pc.push_back(test::randomNonzeroSeries(rng, v, 1, 16));
            const MicroOp P(tag, rng.i(0, 1) - pDepth + 1 + 1, std::move(pc));

            const MicroOp S = randomMicro(rng, tag, rng.i(0, 2), 4, 16);
            const auto [Q, R] = microDivide(S, P);

            // Degree bounds are structural.
            CHECK(Q.top() == S.top() - P.topDegree());
            CHECK(R.top() <= std::max(S.top(), 0));

            // Remainder shape: u-slots in [0, v), eta-levels <= 0.
            for (int level = R.bottom(); level <= R.top(); ++level) {
                CHECK(level <= 0);
                for (const auto& [e, c] : R.coeffAt(level).knownCoeffs()) {
                    (void)c;
                    CHECK(e >= 0);
                    CHECK(e < v);
                }
            }

            checkAgreeOnCommonWindow(microProduct(Q, P) + R, S);
        }
    }
}

TEST_CASE("remainder-shaped perturbations do not change the quotient") {
    Rng rng(999);
    const auto tag = DerivationTag::deltaS(Rational(1));
    for (int trial = 0; trial < 30; ++trial) {
        const int v = rng.i(1, 2);
        std::vector<TruncatedSeries> pc;
        for (int k = 0; k < 3; ++k) pc.push_back(test::randomSeries(rng, 0, 2, 16));
        pc.push_back(test::randomNonzeroSeries(rng, v, 1, 16));
        const MicroOp P(tag, -2, std::move(pc));

        const MicroOp S = randomMicro(rng, tag, 1, 4, 16);
        // Perturbation supported in the remainder shape.
        const MicroOp pert =
            MicroOp::fromSeries(tag, uPow(rng.i(0, v - 1), rng.coeff()), rng.i(-2, 0), -2);
        const auto d1 = microDivide(S, P);
        const auto d2 = microDivide(S + pert, P);
        checkAgreeOnCommonWindow(d1.quotient, d2.quotient);
    }
}

TEST_CASE("microLocalize tracks the leading coefficient valuation") {
    const LaurentPolynomial x = LaurentPolynomial::variable();
    const LaurentPolynomial one(Rational(1));
    const LocalDiffOp L({-one, x});  // x(xd) - 1: dim 1, irr 1, mu 2
    const MicroWindow w = defaultMicroWindow(L);

    const MicroOp at0 = microLocalize(L, GermPoint::zero(), w);
    CHECK(at0.coeffAt(1).valuation() == 1);
    CHECK(at0.coeffAt(1).coeff(1) == Rational(-1));  // -u at the top

    const MicroOp at2 = microLocalize(L, GermPoint::finite(Rational(2)), w);
    CHECK(at2.coeffAt(1).valuation() == 2);  // ord(a1) + ord(w) = 1 + 1

    const MicroOp atInf = microLocalize(L, GermPoint::infinity(), w);
    CHECK(atInf.coeffAt(1).valuation() == 1);

    // Constants localize to themselves.
    const LocalDiffOp c({LaurentPolynomial(Rational(7))});
    const MicroOp cm = microLocalize(c, GermPoint::finite(Rational(3)),
                                     defaultMicroWindow(c));
    CHECK(cm.coeffAt(0).coeff(0) == Rational(7));
}

TEST_CASE("localMellinDim matches irr at 0 and infinity, mu at finite points") {
    const LaurentPolynomial x = LaurentPolynomial::variable();
    const LaurentPolynomial one(Rational(1));
    const LocalDiffOp L({-one, x});
    CHECK(localMellinDim(L, GermPoint::zero()) == 1);
    CHECK(localMellinDim(L, GermPoint::finite(Rational(2))) == 2);
    CHECK(localMellinDim(L, GermPoint::infinity()) == 1);
}

TEST_CASE("microlocal dimensions equal polygon invariants on random germs") {
    Rng rng(5555);
    const Rational sChoices[] = {Rational(1), Rational(-2), Rational(3)};
    for (int trial = 0; trial < 60; ++trial) {
        const LocalDiffOp L = test::randomLocalDiffOp(rng, 3, 3);
        const GermReport inv = invariants(L, GermPoint::zero());
        CHECK(localMellinDim(L, GermPoint::zero()) == inv.irr);
        CHECK(localMellinDim(L, GermPoint::infinity()) == inv.irr);
        const Rational s = sChoices[trial % 3];
        CHECK(localMellinDim(L, GermPoint::finite(s)) == inv.mu);
    }
}
