#ifndef MELLIN_REPORT_IO_HPP
#define MELLIN_REPORT_IO_HPP

#include <string>
#include <utility>
#include <vector>

#include "mellin/stationary_phase.hpp"

namespace mellin {

// The schema-governed machine format of a verification report. Rational
// quantities serialize as "p/q" strings, never floats.
std::string reportToJson(const StationaryPhaseReport& report, bool pretty = true);

// Deterministic SVG 1.1 rendering: one solid polyline per finite polygon
// side, dashed rays for the unbounded boundary clipped to the bounding box.
// Byte-identical output for equal input.
std::string renderPolygonsSvg(
    const std::vector<std::pair<std::string, NewtonPolygon>>& polygons);

}  // namespace mellin

#endif
