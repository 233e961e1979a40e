#include "mellin/newton_polygon.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "mellin/errors.hpp"

namespace mellin {

namespace {

using Point = std::pair<long long, long long>;

long long cross(const Point& o, const Point& a, const Point& b) {
    return (a.first - o.first) * (b.second - o.second) -
           (a.second - o.second) * (b.first - o.first);
}

// Upper concave chain of points sorted by strictly increasing x; collinear
// interior points are merged.
std::vector<Point> upperHull(const std::vector<Point>& pts) {
    std::vector<Point> hull;
    for (const Point& p : pts) {
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) >= 0)
            hull.pop_back();
        hull.push_back(p);
    }
    return hull;
}

// Lower convex chain, same conventions.
std::vector<Point> lowerHull(const std::vector<Point>& pts) {
    std::vector<Point> hull;
    for (const Point& p : pts) {
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0)
            hull.pop_back();
        hull.push_back(p);
    }
    return hull;
}

void sortSides(std::vector<PolygonSide>& sides) {
    std::sort(sides.begin(), sides.end(),
              [](const PolygonSide& a, const PolygonSide& b) { return a.slope < b.slope; });
}

}  // namespace

NewtonPolygon::NewtonPolygon(PolygonKind kind, std::vector<PolygonSide> sides,
                             int verticalHeight, std::pair<Rational, Rational> anchor)
    : kind_(kind),
      sides_(std::move(sides)),
      verticalHeight_(verticalHeight),
      anchor_(std::move(anchor)) {
    sortSides(sides_);
}

Rational NewtonPolygon::width() const {
    Rational w(0);
    for (const auto& s : sides_) w += s.width;
    return w;
}

Rational NewtonPolygon::height() const {
    Rational h(verticalHeight_);
    for (const auto& s : sides_) h += s.slope.abs() * s.width;
    return h;
}

Rational NewtonPolygon::widthOfSign(int sign) const {
    Rational w(0);
    for (const auto& s : sides_)
        if (s.slope.sign() == sign) w += s.width;
    return w;
}

bool NewtonPolygon::hasHorizontalSide() const {
    for (const auto& s : sides_)
        if (s.slope.isZero()) return true;
    return false;
}

std::vector<std::pair<Rational, Rational>> NewtonPolygon::chainVertices() const {
    std::vector<std::pair<Rational, Rational>> verts{anchor_};
    auto push = [&verts](const Rational& du, const Rational& dv) {
        verts.emplace_back(verts.back().first + du, verts.back().second + dv);
    };
    if (kind_ == PolygonKind::Global) {
        // Bottom to top: positive slopes ascending, the vertical side, then
        // negative slopes ascending.
        for (const auto& s : sides_)
            if (s.slope.sign() > 0) push(s.width, s.slope * s.width);
        if (verticalHeight_ > 0) push(Rational(0), Rational(verticalHeight_));
        for (const auto& s : sides_)
            if (s.slope.sign() < 0) push(-s.width, s.slope.abs() * s.width);
        return verts;
    }
    // Left to right in slope order.
    for (const auto& s : sides_) push(s.width, s.slope * s.width);
    return verts;
}

std::string NewtonPolygon::str() const {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& s : sides_) {
        if (!first) os << ", ";
        first = false;
        os << "slope " << s.slope << " width " << s.width;
    }
    if (verticalHeight_ != 0) {
        if (!first) os << ", ";
        os << "vertical " << verticalHeight_;
        first = false;
    }
    if (first) os << "point";
    os << "}";
    return os.str();
}

NewtonPolygon globalPolygon(const DiffOp& P) {
    if (P.isZero()) throw ZeroOperatorError();
    const DiffOp T = convertPresentation(P, Presentation::Theta);

    // One point per z-row: (r, deg alpha_r).
    std::map<int, int> rowDegree;
    for (const auto& [key, c] : T.terms()) {
        (void)c;
        auto [it, inserted] = rowDegree.emplace(key.first, key.second);
        if (!inserted) it->second = std::max(it->second, key.second);
    }
    std::vector<Point> pts;
    pts.reserve(rowDegree.size());
    for (const auto& [r, d] : rowDegree) pts.emplace_back(r, d);

    const std::vector<Point> hull = upperHull(pts);
    std::vector<PolygonSide> sides;
    int vertical = 0;
    for (std::size_t k = 1; k < hull.size(); ++k) {
        const long long dr = hull[k].first - hull[k - 1].first;   // rise in v
        const long long dd = hull[k].second - hull[k - 1].second; // run in u
        if (dd == 0) {
            vertical += static_cast<int>(dr);
        } else {
            sides.push_back({Rational(dr, dd), Rational(std::llabs(dd))});
        }
    }
    // Anchor: bottom vertex, in (u, v) coordinates.
    const std::pair<Rational, Rational> anchor{Rational(hull.front().second),
                                               Rational(hull.front().first)};
    return NewtonPolygon(PolygonKind::Global, std::move(sides), vertical, anchor);
}

namespace {

std::vector<Point> differencePoints(const DiffnceOp& P, ValuationView view) {
    std::vector<Point> pts;
    for (int i = P.minPhiDegree(); i <= P.maxPhiDegree(); ++i) {
        const LaurentPolynomial a = P.phiCoefficient(i);
        if (a.isZero()) continue;
        const long long v = (view == ValuationView::Theta)
                                ? -static_cast<long long>(a.degree())
                                : static_cast<long long>(a.valuation());
        pts.emplace_back(i, v);
    }
    return pts;
}

}  // namespace

NewtonPolygon differencePolygon(const DiffnceOp& P, ValuationView view) {
    if (P.isZero()) throw ZeroOperatorError();
    const std::vector<Point> hull = lowerHull(differencePoints(P, view));
    std::vector<PolygonSide> sides;
    for (std::size_t k = 1; k < hull.size(); ++k) {
        const long long dx = hull[k].first - hull[k - 1].first;
        const long long dy = hull[k].second - hull[k - 1].second;
        sides.push_back({Rational(dy, dx), Rational(dx)});
    }
    const std::pair<Rational, Rational> anchor{Rational(hull.front().first),
                                               Rational(hull.front().second)};
    return NewtonPolygon(PolygonKind::Difference, std::move(sides), 0, anchor);
}

NewtonPolygon localDiffPolygon(const LocalDiffOp& L) {
    if (L.isZero()) throw ZeroOperatorError();
    std::vector<Point> pts;
    for (int i = 0; i <= L.degree(); ++i) {
        const LaurentPolynomial& a = L.coeff(i);
        if (!a.isZero()) pts.emplace_back(i, a.valuation());
    }
    std::vector<Point> hull = lowerHull(pts);
    // Strictly negative minorant sides lie inside the quadrant hull (the
    // flat leftward ray passes below them); the boundary starts at the
    // minimum-height vertex.
    std::size_t start = 0;
    while (start + 1 < hull.size() && hull[start + 1].second < hull[start].second) ++start;
    std::vector<PolygonSide> sides;
    for (std::size_t k = start + 1; k < hull.size(); ++k) {
        const long long dx = hull[k].first - hull[k - 1].first;
        const long long dy = hull[k].second - hull[k - 1].second;
        sides.push_back({Rational(dy, dx), Rational(dx)});
    }
    const std::pair<Rational, Rational> anchor{Rational(hull[start].first),
                                               Rational(hull[start].second)};
    return NewtonPolygon(PolygonKind::LocalDifferential, std::move(sides), 0, anchor);
}

NewtonPolygon rotateCW(const NewtonPolygon& N) {
    if (N.kind() != PolygonKind::Global)
        throw WrongKindError("rotateCW is defined on Global polygons only");
    std::vector<PolygonSide> sides;
    for (const auto& s : N.sides()) {
        // Direction (du, dv) maps to (dv, -du): slope s -> -1/s, and the new
        // horizontal extent is the old rise |s| * width.
        sides.push_back({-s.slope.inverse(), s.slope.abs() * s.width});
    }
    if (N.verticalHeight() > 0)
        sides.push_back({Rational(0), Rational(N.verticalHeight())});
    const std::pair<Rational, Rational> anchor{N.anchor().second, -N.anchor().first};
    return NewtonPolygon(PolygonKind::Difference, std::move(sides), 0, anchor);
}

std::optional<LaurentPolynomial> horizontalSidePolynomial(const DiffnceOp& P) {
    if (P.isZero()) throw ZeroOperatorError();
    // A slope-0 side of the lower chain sits at the minimum height, and
    // exists exactly when at least two points attain it.
    const std::vector<Point> pts = differencePoints(P, ValuationView::Theta);
    long long h0 = pts.front().second;
    for (const Point& p : pts) h0 = std::min(h0, p.second);
    int count = 0;
    for (const Point& p : pts)
        if (p.second == h0) ++count;
    if (count < 2) return std::nullopt;

    LaurentPolynomial poly;
    for (const Point& p : pts) {
        if (p.second != h0) continue;
        const int i = static_cast<int>(p.first);
        poly.insertTerm(i, P.phiCoefficient(i).leadingCoeff());
    }
    return poly;
}

HorzResult horz(const DiffnceOp& P) {
    const auto poly = horizontalSidePolynomial(P);
    if (!poly.has_value()) return {};
    const RationalRootsResult rr = rationalRoots(*poly);
    return {rr.roots, rr.residualDegree};
}

}  // namespace mellin
