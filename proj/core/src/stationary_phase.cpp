#include "mellin/stationary_phase.hpp"

#include <random>
#include <sstream>

#include "mellin/errors.hpp"

namespace mellin {

std::string checkName(CheckId id) {
    switch (id) {
        case CheckId::Rotation: return "ROTATION";
        case CheckId::DimIdentity: return "DIM_IDENTITY";
        case CheckId::SlopePartition: return "SLOPE_PARTITION";
        case CheckId::HorzLocalization: return "HORZ_LOCALIZATION";
        default: return "LOCAL_DIMS";
    }
}

bool StationaryPhaseReport::passedForCli() const {
    for (const auto& [id, result] : checks) {
        if (id == CheckId::DimIdentity) continue;
        if (result.status == CheckStatus::Fail) return false;
    }
    if (expectedDefect.has_value())
        return punctualDefect.has_value() && *punctualDefect == *expectedDefect;
    auto it = checks.find(CheckId::DimIdentity);
    return it == checks.end() || it->second.status != CheckStatus::Fail;
}

namespace {

long toLong(const Rational& r) {
    if (!r.isInteger()) throw Error("expected an integer quantity, got " + r.str());
    return r.numerator().get_si();
}

int dimWithRetry(const LocalDiffOp& germ, const GermPoint& point, int baseGuard) {
    for (int widen : {0, 16, 48}) {
        try {
            return localMellinDim(germ, point, baseGuard + widen);
        } catch (const InsufficientPrecisionError&) {
            if (widen == 48) throw;
        }
    }
    throw InsufficientPrecisionError("unreachable");
}

}  // namespace

StationaryPhaseReport verify(const DiffOp& P, std::optional<int> expectDefect,
                             int uGuard) {
    if (P.isZero()) throw ZeroOperatorError();
    const DiffOp T = convertPresentation(P, Presentation::Theta);

    StationaryPhaseReport report;
    report.operatorText = T.str();
    report.expectedDefect = expectDefect;

    // (A) Rotation: two disjoint code paths meet in one polygon class.
    const RotationCheck rotation = checkRotation(T);
    report.globalPolygon = globalPolygon(T);
    const DiffnceOp germInf = germAtInfinityOp(mellin(T));
    report.mellinPolygon = rotation.lhs;
    report.rotatedPolygon = rotation.rhs;
    report.checks[CheckId::Rotation] = {rotation.equal ? CheckStatus::Pass : CheckStatus::Fail,
                                        rotation.equal ? "" : "polygon mismatch"};

    // Width partition of the difference polygon (always available).
    report.widthPartition = {toLong(report.mellinPolygon->widthOfSign(-1)),
                             toLong(report.mellinPolygon->widthOfSign(0)),
                             toLong(report.mellinPolygon->widthOfSign(1))};

    const SingularPoints candidates = singularPoints(T);
    if (candidates.nonRationalResidualDegree > 0) {
        const std::string reason =
            "leading T-coefficient " + T.leadingOpCoefficient().str("z") +
            " has a non-rational factor of degree " +
            std::to_string(candidates.nonRationalResidualDegree);
        for (CheckId id : {CheckId::DimIdentity, CheckId::SlopePartition,
                           CheckId::HorzLocalization, CheckId::LocalDims})
            report.checks[id] = {CheckStatus::Skipped, reason};
        // Germs at 0 and infinity are still well-defined and reported.
        report.locals.push_back(invariants(germAt(T, GermPoint::zero()), GermPoint::zero()));
        report.locals.push_back(
            invariants(germAt(T, GermPoint::infinity()), GermPoint::infinity()));
        return report;
    }

    // Germ reports at 0, each candidate point, and infinity.
    std::vector<GermPoint> points{GermPoint::zero()};
    for (const Rational& s : candidates.points) points.push_back(GermPoint::finite(s));
    points.push_back(GermPoint::infinity());

    long irr0 = 0, irrInf = 0, muSum = 0;
    std::map<GermPoint, LocalDiffOp> germs;
    for (const GermPoint& pt : points) {
        const LocalDiffOp germ = germAt(T, pt);
        germs.emplace(pt, germ);
        const GermReport gr = invariants(germ, pt);
        report.locals.push_back(gr);
        switch (pt.kind) {
            case GermPoint::Kind::Zero: irr0 = gr.irr; break;
            case GermPoint::Kind::Infinity: irrInf = gr.irr; break;
            default: muSum += gr.mu; break;
        }
    }

    // (B) Width of the Mellin germ polygon against the local sum.
    const long width = toLong(report.mellinPolygon->width());
    const long defect = width - (irr0 + irrInf + muSum);
    report.punctualDefect = defect;
    report.checks[CheckId::DimIdentity] = {
        defect == 0 ? CheckStatus::Pass : CheckStatus::Fail,
        defect == 0 ? "" : "width " + std::to_string(width) + " != local sum " +
                               std::to_string(irr0 + irrInf + muSum)};

    // (C) Slope-sign partition: negative width matches irr at 0, positive
    // matches irr at infinity, slope-zero width carries the mu sum plus the
    // punctual defect.
    {
        const bool ok = report.widthPartition.neg == irr0 &&
                        report.widthPartition.pos == irrInf &&
                        report.widthPartition.zero == muSum + defect;
        std::ostringstream note;
        if (!ok)
            note << "partition (" << report.widthPartition.neg << ","
                 << report.widthPartition.zero << "," << report.widthPartition.pos
                 << ") vs (irr0=" << irr0 << ", sum mu+defect=" << muSum + defect
                 << ", irrInf=" << irrInf << ")";
        report.checks[CheckId::SlopePartition] = {ok ? CheckStatus::Pass : CheckStatus::Fail,
                                                  note.str()};
    }

    // (D) Horizontal zeros of the Mellin germ localize at candidate points.
    {
        report.horzSet = horz(germInf);
        bool contained = report.horzSet.residualDegree == 0;
        for (const Rational& r : report.horzSet.roots)
            if (candidates.points.find(r) == candidates.points.end()) contained = false;
        report.checks[CheckId::HorzLocalization] = {
            contained ? CheckStatus::Pass : CheckStatus::Fail,
            contained ? "" : "horizontal zeros escape the candidate singular set"};
    }

    // (E) Microlocal dimensions against the polygon-derived invariants.
    {
        bool ok = true;
        std::ostringstream note;
        try {
            for (const GermReport& gr : report.locals) {
                const int expected =
                    gr.point.kind == GermPoint::Kind::Finite ? gr.mu : gr.irr;
                const int dim = dimWithRetry(germs.at(gr.point), gr.point, uGuard);
                report.localMellinDims[gr.point] = dim;
                if (dim != expected) {
                    ok = false;
                    note << "point " << gr.point.str() << ": microlocal " << dim
                         << " vs polygon " << expected << "; ";
                }
            }
        } catch (const InsufficientPrecisionError& e) {
            ok = false;
            note << e.what();
        }
        report.checks[CheckId::LocalDims] = {ok ? CheckStatus::Pass : CheckStatus::Fail,
                                             note.str()};
    }

    return report;
}

DiffOp randomOperator(std::uint64_t seed, const OperatorProfile& profile) {
    std::mt19937_64 eng(seed);
    auto draw = [&eng](int lo, int hi) {
        return lo + static_cast<int>(eng() % static_cast<std::uint64_t>(hi - lo + 1));
    };
    auto drawCoeff = [&]() {
        int num = 0;
        while (num == 0) num = draw(-profile.maxNumerator, profile.maxNumerator);
        const int denPick = draw(0, 5);
        const int den = denPick == 4 ? 2 : (denPick == 5 ? 3 : 1);
        return Rational(num, den);
    };

    DiffOp op(Presentation::Theta);
    const int n = draw(0, profile.maxTDegree);
    for (int j = 0; j < n; ++j) {
        if (draw(0, 9) < 3) continue;  // sparse rows
        const int terms = draw(1, 2);
        for (int t = 0; t < terms; ++t)
            op.insertTerm(draw(profile.minZExp, profile.maxZExp), j, drawCoeff());
    }
    // Leading row is always present.
    if (profile.unitLeading) {
        op.insertTerm(0, n, drawCoeff());
    } else {
        const int terms = draw(1, 2);
        for (int t = 0; t < terms; ++t)
            op.insertTerm(draw(profile.minZExp, profile.maxZExp), n, drawCoeff());
        if (op.isZero() || op.opDegree() != n)
            op.insertTerm(draw(profile.minZExp, profile.maxZExp), n, Rational(1));
    }
    return op;
}

}  // namespace mellin
