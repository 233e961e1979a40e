#ifndef MELLIN_GERMS_HPP
#define MELLIN_GERMS_HPP

#include <set>
#include <string>
#include <vector>

#include "mellin/local_diff_op.hpp"
#include "mellin/newton_polygon.hpp"

namespace mellin {

// A point of the projective line at which germs are taken: 0, a finite
// nonzero rational point, or infinity.
struct GermPoint {
    enum class Kind { Zero, Finite, Infinity };
    Kind kind;
    Rational s;  // meaningful for Finite only

    static GermPoint zero() { return {Kind::Zero, Rational(0)}; }
    static GermPoint finite(const Rational& s) { return {Kind::Finite, s}; }
    static GermPoint infinity() { return {Kind::Infinity, Rational(0)}; }

    bool operator==(const GermPoint& o) const {
        return kind == o.kind && (kind != Kind::Finite || s == o.s);
    }
    bool operator<(const GermPoint& o) const {
        if (kind != o.kind) return static_cast<int>(kind) < static_cast<int>(o.kind);
        return kind == Kind::Finite && s < o.s;
    }

    std::string str() const {
        switch (kind) {
            case Kind::Zero: return "0";
            case Kind::Infinity: return "inf";
            default: return s.str();
        }
    }
};

// Local invariants of a germ: dimension, irregularity, vanishing-cycle
// dimension mu = dim + irr, and the positive polygon slopes.
struct GermReport {
    GermPoint point;
    int dim = 0;
    int irr = 0;
    int mu = 0;
    std::vector<PolygonSide> slopes;  // positive-slope sides with widths
};

// Germ of P at a point. Zero reinterprets the coefficients in k((z));
// finite points translate; infinity inverts the coordinate. All results
// are normalized. Throws ZeroOperatorError and, for Finite, requires a
// nonzero s.
LocalDiffOp germAt(const DiffOp& P, const GermPoint& point);

// dim = T-degree, irr = height of the local polygon's positive part,
// mu = dim + irr.
GermReport invariants(const LocalDiffOp& L, const GermPoint& point);

struct SingularPoints {
    std::set<Rational> points;          // nonzero rational roots of the leading T-coefficient
    int nonRationalResidualDegree = 0;  // degree of candidates we cannot name
};

// Candidate singular set: the nonzero rational roots of the leading
// T-coefficient of P. Apparent singularities may be included; callers get
// per-point germ data rather than a module-theoretic decision.
SingularPoints singularPoints(const DiffOp& P);

}  // namespace mellin

#endif
