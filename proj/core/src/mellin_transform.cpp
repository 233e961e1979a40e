#include "mellin/mellin_transform.hpp"

#include "mellin/errors.hpp"

namespace mellin {

DiffnceOp mellin(const DiffOp& P) {
    if (P.isZero()) throw ZeroOperatorError();
    const DiffOp T = convertPresentation(P, Presentation::Theta);
    DiffnceOp out;
    for (const auto& [key, c] : T.terms()) {
        const auto [r, j] = key;
        // z^r T^j -> Phi^r (-eta)^j = (-1)^j (eta + r)^j Phi^r
        const Rational sign = (j % 2 == 0) ? Rational(1) : Rational(-1);
        for (int b = 0; b <= j; ++b)
            out.insertTerm(r, b, c * sign * binomial(j, b) * Rational(r).pow(j - b));
    }
    return out;
}

DiffnceOp germAtInfinityOp(const DiffnceOp& N) {
    if (N.isZero()) throw ZeroOperatorError();
    const int r = N.minPhiDegree();
    return r == 0 ? N : leftMulPhiPower(-r, N);
}

RotationCheck checkRotation(const DiffOp& P) {
    const NewtonPolygon lhs =
        differencePolygon(germAtInfinityOp(mellin(P)), ValuationView::Theta);
    const NewtonPolygon rhs = rotateCW(globalPolygon(P));
    const bool equal = (lhs == rhs);
    return {lhs, rhs, equal};
}

}  // namespace mellin
