#ifndef MELLIN_NEWTON_POLYGON_HPP
#define MELLIN_NEWTON_POLYGON_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mellin/diff_op.hpp"
#include "mellin/diffnce_op.hpp"
#include "mellin/local_diff_op.hpp"

namespace mellin {

enum class PolygonKind { Global, Difference, LocalDifferential };

// How difference-operator coefficients are valued when building a polygon:
// Theta reads a_i(eta) in theta = eta^-1, so v(a_i) = -deg_eta(a_i); Eta
// reads the eta-adic valuation directly.
enum class ValuationView { Theta, Eta };

struct PolygonSide {
    Rational slope;
    Rational width;  // horizontal extent, > 0
    bool operator==(const PolygonSide& o) const {
        return slope == o.slope && width == o.width;
    }
};

// Canonical form of (the translation class of) a Newton polygon: the
// finite-slope boundary as a side list with strictly increasing slopes,
// plus the extent of the finite vertical side if there is one. Translation
// classes compare structurally; the anchor vertex is kept only so the
// polygon can be drawn.
class NewtonPolygon {
  public:
    NewtonPolygon(PolygonKind kind, std::vector<PolygonSide> sides, int verticalHeight,
                  std::pair<Rational, Rational> anchor);

    PolygonKind kind() const { return kind_; }
    const std::vector<PolygonSide>& sides() const { return sides_; }
    int verticalHeight() const { return verticalHeight_; }
    const std::pair<Rational, Rational>& anchor() const { return anchor_; }

    // Total horizontal extent of the finite-slope boundary.
    Rational width() const;
    // Total vertical extent: rises of the finite sides plus the vertical side.
    Rational height() const;

    Rational widthOfSign(int sign) const;  // sum of widths with sgn(slope) == sign

    bool hasHorizontalSide() const;

    // Translation-class equality (kind included).
    bool operator==(const NewtonPolygon& o) const {
        return kind_ == o.kind_ && sides_ == o.sides_ && verticalHeight_ == o.verticalHeight_;
    }

    // Geometric vertex chain starting at the anchor, finite sides only, for
    // rendering. Global polygons traverse bottom to top; the others left to
    // right.
    std::vector<std::pair<Rational, Rational>> chainVertices() const;

    std::string str() const;

  private:
    PolygonKind kind_;
    std::vector<PolygonSide> sides_;  // strictly increasing slopes
    int verticalHeight_;
    std::pair<Rational, Rational> anchor_;
};

// Polygon of P = sum_r alpha_r(T) z^r from the half-lines
// {u <= deg(alpha_r), v = r}. Throws ZeroOperatorError on 0.
NewtonPolygon globalPolygon(const DiffOp& P);

// Polygon of a difference operator from the half-lines
// {x = i, y >= v(a_i)}. Width equals the Phi-degree spread.
NewtonPolygon differencePolygon(const DiffnceOp& P,
                                ValuationView view = ValuationView::Theta);

// Polygon of a local operator from the quadrants {u <= i, v >= val(a_i)};
// the height of its positive-slope part is the irregularity.
NewtonPolygon localDiffPolygon(const LocalDiffOp& L);

// (u,v) -> (v,-u) on a Global polygon: a side of slope s becomes a side of
// slope -1/s, the vertical side becomes the horizontal side. Result kind is
// Difference. Throws WrongKindError otherwise.
NewtonPolygon rotateCW(const NewtonPolygon& N);

// Polynomial attached to the horizontal side of the difference polygon of
// P (theta view): sum of leading eta-coefficients lc(a_i) t^i over the
// indices i whose point lies on that side. Empty when no horizontal side.
std::optional<LaurentPolynomial> horizontalSidePolynomial(const DiffnceOp& P);

struct HorzResult {
    std::set<Rational> roots;  // rational horizontal zeros, multiplicity ignored
    int residualDegree = 0;    // degree of the non-rational residual factor
};

// Horizontal zeros of P: rational roots of horizontalSidePolynomial, empty
// when the polygon has no horizontal side.
HorzResult horz(const DiffnceOp& P);

}  // namespace mellin

#endif
