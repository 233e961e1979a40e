#ifndef MELLIN_STATIONARY_PHASE_HPP
#define MELLIN_STATIONARY_PHASE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mellin/germs.hpp"
#include "mellin/mellin_transform.hpp"
#include "mellin/micro_op.hpp"
#include "mellin/newton_polygon.hpp"

namespace mellin {

enum class CheckId { Rotation, DimIdentity, SlopePartition, HorzLocalization, LocalDims };
enum class CheckStatus { Pass, Fail, Skipped };

struct CheckResult {
    CheckStatus status = CheckStatus::Skipped;
    std::string note;  // reason for Skipped, diagnostics for Fail

    std::string str() const {
        switch (status) {
            case CheckStatus::Pass: return "PASS";
            case CheckStatus::Fail: return "FAIL";
            default: return note.empty() ? "SKIPPED" : "SKIPPED(" + note + ")";
        }
    }
};

std::string checkName(CheckId id);

struct WidthPartition {
    long neg = 0;
    long zero = 0;
    long pos = 0;
};

// Machine-readable verdict for one operator: the three polygons, per-point
// local invariants, microlocal dimensions, the width partition, horizontal
// zeros, the punctual defect, and the five check outcomes.
struct StationaryPhaseReport {
    std::string operatorText;
    std::optional<NewtonPolygon> globalPolygon;
    std::optional<NewtonPolygon> mellinPolygon;
    std::optional<NewtonPolygon> rotatedPolygon;
    std::vector<GermReport> locals;  // ZERO, candidates ascending, INFINITY
    std::map<GermPoint, int> localMellinDims;
    WidthPartition widthPartition;
    HorzResult horzSet;
    // width(mellinPolygon) - (irr_0 + irr_inf + sum mu_s). Positive exactly
    // when the presentation carries punctual parts; absent when candidate
    // singular points are not rational.
    std::optional<long> punctualDefect;
    std::map<CheckId, CheckResult> checks;
    std::optional<int> expectedDefect;

    // CLI exit contract: Skipped is neutral; a stated defect expectation
    // replaces the DIM_IDENTITY gate.
    bool passedForCli() const;
};

// Runs the executable identities on P: (A) polygon rotation, (B) the
// width/dimension formula with the punctual defect recorded, (C) the
// slope-sign partition, (D) horizontal-zero localization, (E) microlocal
// dimensions against polygon invariants. Pure: equal inputs and window
// policy give equal reports. uGuard widens the microlocal u-precision
// window; insufficient precision retries twice before failing check (E).
StationaryPhaseReport verify(const DiffOp& P, std::optional<int> expectDefect = {},
                             int uGuard = 0);

struct OperatorProfile {
    int maxTDegree = 3;
    int minZExp = -2;
    int maxZExp = 2;
    int maxNumerator = 4;
    bool unitLeading = false;

    static OperatorProfile small() { return {}; }
    // Unit leading T-coefficient: the cyclic module is free, so the
    // punctual defect vanishes by construction.
    static OperatorProfile regular() { return {4, -3, 3, 4, true}; }
    // Stress profile for the rotation corpus.
    static OperatorProfile wide() { return {5, -4, 4, 6, false}; }
};

// Deterministic pseudorandom nonzero T-form operator. The same seed and
// profile always produce the same operator.
DiffOp randomOperator(std::uint64_t seed, const OperatorProfile& profile);

}  // namespace mellin

#endif
