#include "mellin/germs.hpp"

#include "mellin/errors.hpp"

namespace mellin {

LocalDiffOp germAt(const DiffOp& P, const GermPoint& point) {
    if (P.isZero()) throw ZeroOperatorError();
    switch (point.kind) {
        case GermPoint::Kind::Zero:
            return reinterpretAtZero(P);
        case GermPoint::Kind::Finite:
            if (point.s.isZero()) throw Error("finite germ point must be nonzero");
            return translateOp(P, point.s);
        default:
            return invertCoordinate(P);
    }
}

GermReport invariants(const LocalDiffOp& L, const GermPoint& point) {
    if (L.isZero()) throw ZeroOperatorError();
    const LocalDiffOp N = L.normalized();
    const NewtonPolygon polygon = localDiffPolygon(N);

    GermReport report;
    report.point = point;
    report.dim = N.degree();
    const Rational irr = [&polygon] {
        Rational h(0);
        for (const auto& s : polygon.sides())
            if (s.slope.sign() > 0) h += s.slope * s.width;
        return h;
    }();
    if (!irr.isInteger()) throw Error("non-integer irregularity; polygon data corrupt");
    report.irr = static_cast<int>(irr.numerator().get_si());
    report.mu = report.dim + report.irr;
    for (const auto& s : polygon.sides())
        if (s.slope.sign() > 0) report.slopes.push_back(s);
    return report;
}

SingularPoints singularPoints(const DiffOp& P) {
    if (P.isZero()) throw ZeroOperatorError();
    const DiffOp T = convertPresentation(P, Presentation::Theta);
    const LaurentPolynomial lead = T.leadingOpCoefficient();
    const RationalRootsResult rr = rationalRoots(lead);
    SingularPoints result;
    result.points = rr.roots;  // rationalRoots never reports 0
    result.nonRationalResidualDegree = rr.residualDegree;
    return result;
}

}  // namespace mellin
