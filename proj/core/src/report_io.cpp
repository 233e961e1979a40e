#include "mellin/report_io.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace mellin {

namespace {

using nlohmann::json;

json polygonToJson(const NewtonPolygon& p) {
    json sides = json::array();
    for (const auto& s : p.sides())
        sides.push_back({{"slope", s.slope.str()}, {"width", s.width.str()}});
    return {{"sides", sides}, {"vertical_height", p.verticalHeight()}};
}

}  // namespace

std::string reportToJson(const StationaryPhaseReport& report, bool pretty) {
    json doc;
    doc["operator"] = report.operatorText;
    if (report.globalPolygon) doc["global_polygon"] = polygonToJson(*report.globalPolygon);
    if (report.mellinPolygon) doc["mellin_polygon"] = polygonToJson(*report.mellinPolygon);
    if (report.rotatedPolygon) doc["rotated_polygon"] = polygonToJson(*report.rotatedPolygon);

    json locals = json::array();
    for (const GermReport& gr : report.locals) {
        json slopes = json::array();
        for (const auto& s : gr.slopes)
            slopes.push_back({{"slope", s.slope.str()}, {"width", s.width.str()}});
        locals.push_back({{"point", gr.point.str()},
                          {"dim", gr.dim},
                          {"irr", gr.irr},
                          {"mu", gr.mu},
                          {"slopes", slopes}});
    }
    doc["locals"] = locals;

    json dims = json::object();
    for (const auto& [pt, dim] : report.localMellinDims) dims[pt.str()] = dim;
    doc["local_mellin_dims"] = dims;

    json horzRoots = json::array();
    for (const Rational& r : report.horzSet.roots) horzRoots.push_back(r.str());
    doc["horz"] = horzRoots;
    doc["horz_residual_degree"] = report.horzSet.residualDegree;

    if (report.punctualDefect.has_value())
        doc["defect"] = *report.punctualDefect;
    else
        doc["defect"] = nullptr;
    if (report.expectedDefect.has_value()) doc["expected_defect"] = *report.expectedDefect;

    doc["width_partition"] = {{"neg", report.widthPartition.neg},
                              {"zero", report.widthPartition.zero},
                              {"pos", report.widthPartition.pos}};

    json checks = json::object();
    for (const auto& [id, result] : report.checks) checks[checkName(id)] = result.str();
    doc["checks"] = checks;

    return pretty ? doc.dump(2) : doc.dump();
}

namespace {

struct Pt {
    double x, y;
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v + 0.0);  // normalize -0
    return buf;
}

}  // namespace

std::string renderPolygonsSvg(
    const std::vector<std::pair<std::string, NewtonPolygon>>& polygons) {
    constexpr double kScale = 36.0;
    constexpr double kRay = 2.0;     // ray length in lattice units
    constexpr double kMargin = 1.0;  // bbox margin in lattice units
    constexpr double kGap = 40.0;    // horizontal gap between panels, px

    std::ostringstream body;
    double xCursor = 0.0;
    double panelHeightMax = 0.0;

    for (const auto& [label, polygon] : polygons) {
        const auto chain = polygon.chainVertices();
        std::vector<Pt> pts;
        pts.reserve(chain.size());
        for (const auto& [u, v] : chain) pts.push_back({u.toDouble(), v.toDouble()});

        // Rays in lattice coordinates, per polygon kind.
        std::vector<std::pair<Pt, Pt>> rays;
        const Pt first = pts.front(), last = pts.back();
        switch (polygon.kind()) {
            case PolygonKind::Global:
                rays.push_back({first, {first.x - kRay, first.y}});
                rays.push_back({last, {last.x - kRay, last.y}});
                break;
            case PolygonKind::Difference:
                rays.push_back({first, {first.x, first.y + kRay}});
                rays.push_back({last, {last.x, last.y + kRay}});
                break;
            case PolygonKind::LocalDifferential:
                rays.push_back({first, {first.x - kRay, first.y}});
                rays.push_back({last, {last.x, last.y + kRay}});
                break;
        }

        double minX = pts.front().x, maxX = minX, minY = pts.front().y, maxY = minY;
        auto extend = [&](const Pt& p) {
            minX = std::min(minX, p.x);
            maxX = std::max(maxX, p.x);
            minY = std::min(minY, p.y);
            maxY = std::max(maxY, p.y);
        };
        for (const Pt& p : pts) extend(p);
        for (const auto& [a, b] : rays) {
            extend(a);
            extend(b);
        }
        minX -= kMargin;
        maxX += kMargin;
        minY -= kMargin;
        maxY += kMargin;

        const double panelW = (maxX - minX) * kScale;
        const double panelH = (maxY - minY) * kScale + 24.0;  // room for the label
        panelHeightMax = std::max(panelHeightMax, panelH);

        auto toSvg = [&](const Pt& p) -> Pt {
            return {xCursor + (p.x - minX) * kScale, 18.0 + (maxY - p.y) * kScale};
        };

        body << "  <g>\n";
        body << "    <text x=\"" << fmt(xCursor) << "\" y=\"12.00\" font-family=\"monospace\""
             << " font-size=\"12\">" << label << "</text>\n";

        // Light axes where they cross the box.
        if (minX < 0 && maxX > 0) {
            const Pt a = toSvg({0, minY}), b = toSvg({0, maxY});
            body << "    <line x1=\"" << fmt(a.x) << "\" y1=\"" << fmt(a.y) << "\" x2=\""
                 << fmt(b.x) << "\" y2=\"" << fmt(b.y)
                 << "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
        }
        if (minY < 0 && maxY > 0) {
            const Pt a = toSvg({minX, 0}), b = toSvg({maxX, 0});
            body << "    <line x1=\"" << fmt(a.x) << "\" y1=\"" << fmt(a.y) << "\" x2=\""
                 << fmt(b.x) << "\" y2=\"" << fmt(b.y)
                 << "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
        }

        // One polyline per finite side.
        for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
            const Pt a = toSvg(pts[i]), b = toSvg(pts[i + 1]);
            body << "    <polyline points=\"" << fmt(a.x) << "," << fmt(a.y) << " "
                 << fmt(b.x) << "," << fmt(b.y)
                 << "\" fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"2\"/>\n";
        }
        // Dashed rays for the unbounded boundary, clipped to the box.
        for (const auto& [a0, b0] : rays) {
            const Pt a = toSvg(a0), b = toSvg(b0);
            body << "    <polyline points=\"" << fmt(a.x) << "," << fmt(a.y) << " "
                 << fmt(b.x) << "," << fmt(b.y)
                 << "\" fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"1\""
                 << " stroke-dasharray=\"5,4\"/>\n";
        }
        // Vertices.
        for (const Pt& p : pts) {
            const Pt a = toSvg(p);
            body << "    <circle cx=\"" << fmt(a.x) << "\" cy=\"" << fmt(a.y)
                 << "\" r=\"2.50\" fill=\"#000000\"/>\n";
        }
        body << "  </g>\n";
        xCursor += panelW + kGap;
    }

    const double totalW = xCursor > 0 ? xCursor - kGap : 0.0;
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
       << fmt(totalW) << "\" height=\"" << fmt(panelHeightMax) << "\">\n"
       << body.str() << "</svg>\n";
    return os.str();
}

}  // namespace mellin
