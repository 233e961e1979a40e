#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "mellin/errors.hpp"
#include "mellin/germs.hpp"
#include "mellin/mellin_transform.hpp"
#include "mellin/micro_op.hpp"
#include "mellin/operator_expr.hpp"
#include "mellin/report_io.hpp"
#include "mellin/stationary_phase.hpp"

namespace {

using nlohmann::json;

constexpr int kExitCheckFailure = 1;
constexpr int kExitInputError = 2;

bool useColor() {
    return std::getenv("NO_COLOR") == nullptr && isatty(fileno(stdout));
}

std::string paint(const std::string& text, const char* code) {
    if (!useColor()) return text;
    return std::string("\033[") + code + "m" + text + "\033[0m";
}

std::string statusText(const mellin::CheckResult& r) {
    switch (r.status) {
        case mellin::CheckStatus::Pass: return paint("PASS", "32");
        case mellin::CheckStatus::Fail: return paint("FAIL", "31");
        default: return paint(r.str(), "33");
    }
}

mellin::DiffOp parseOrExit(const std::string& text) {
    try {
        return mellin::parseToOperator(text);
    } catch (const mellin::SyntaxError& e) {
        std::cerr << "error: " << e.what() << "\n";
        std::cerr << "  " << text << "\n  " << std::string(e.offset, ' ') << "^\n";
        std::exit(kExitInputError);
    } catch (const mellin::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        std::exit(kExitInputError);
    }
}

mellin::GermPoint parsePoint(const std::string& text) {
    if (text == "0") return mellin::GermPoint::zero();
    if (text == "inf" || text == "infinity" || text == "oo")
        return mellin::GermPoint::infinity();
    const mellin::Rational s = mellin::Rational::parse(text);
    if (s.isZero()) return mellin::GermPoint::zero();
    return mellin::GermPoint::finite(s);
}

void writeFileOrExit(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot write '" << path << "'\n";
        std::exit(kExitInputError);
    }
    out << content;
}

json polygonJson(const mellin::NewtonPolygon& p) {
    json sides = json::array();
    for (const auto& s : p.sides())
        sides.push_back({{"slope", s.slope.str()}, {"width", s.width.str()}});
    return {{"sides", sides}, {"vertical_height", p.verticalHeight()}};
}

void printPolygonHuman(const mellin::NewtonPolygon& p, const std::string& name) {
    std::cout << name << ": " << p.str() << "\n";
    std::cout << "  width " << p.width() << ", height " << p.height() << "\n";
}

struct GlobalOpts {
    bool json = false;
    std::string svgPath;
    int precision = 0;
};

int runVerify(const std::string& exprText, std::optional<int> expectDefect,
              const GlobalOpts& opts) {
    const mellin::DiffOp op = parseOrExit(exprText);
    mellin::StationaryPhaseReport report;
    try {
        report = mellin::verify(op, expectDefect, opts.precision);
    } catch (const mellin::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }

    for (const auto& [id, result] : report.checks)
        if (result.status == mellin::CheckStatus::Skipped)
            std::cerr << "warning: " << mellin::checkName(id) << " skipped: " << result.note
                      << "\n";

    if (!opts.svgPath.empty()) {
        std::vector<std::pair<std::string, mellin::NewtonPolygon>> polys;
        if (report.globalPolygon) polys.emplace_back("global", *report.globalPolygon);
        if (report.mellinPolygon) polys.emplace_back("mellin germ", *report.mellinPolygon);
        if (report.rotatedPolygon) polys.emplace_back("rotated", *report.rotatedPolygon);
        writeFileOrExit(opts.svgPath, mellin::renderPolygonsSvg(polys));
    }

    if (opts.json) {
        std::cout << mellin::reportToJson(report) << "\n";
    } else {
        std::cout << "operator: " << report.operatorText << "\n";
        if (report.globalPolygon) printPolygonHuman(*report.globalPolygon, "global polygon");
        if (report.mellinPolygon)
            printPolygonHuman(*report.mellinPolygon, "mellin germ polygon");
        std::cout << "locals:\n";
        for (const auto& gr : report.locals)
            std::cout << "  at " << gr.point.str() << ": dim " << gr.dim << ", irr "
                      << gr.irr << ", mu " << gr.mu << "\n";
        if (!report.localMellinDims.empty()) {
            std::cout << "local mellin dims:";
            for (const auto& [pt, dim] : report.localMellinDims)
                std::cout << " " << pt.str() << "->" << dim;
            std::cout << "\n";
        }
        std::cout << "horz: {";
        bool first = true;
        for (const auto& r : report.horzSet.roots) {
            std::cout << (first ? "" : ", ") << r.str();
            first = false;
        }
        std::cout << "}\n";
        if (report.punctualDefect)
            std::cout << "punctual defect: " << *report.punctualDefect << "\n";
        for (const auto& [id, result] : report.checks)
            std::cout << "  " << mellin::checkName(id) << ": " << statusText(result) << "\n";
    }
    return report.passedForCli() ? 0 : kExitCheckFailure;
}

int runCorpus(std::uint64_t seed, int count, const std::string& profileName,
              const GlobalOpts& opts) {
    mellin::OperatorProfile profile;
    if (profileName == "SMALL") {
        profile = mellin::OperatorProfile::small();
    } else if (profileName == "REGULAR") {
        profile = mellin::OperatorProfile::regular();
    } else {
        std::cerr << "error: unknown profile '" << profileName << "'\n";
        return kExitInputError;
    }

    int failures = 0;
    std::map<std::string, int> passCounts, failCounts, skipCounts;
    long defectNonzero = 0;
    json results = json::array();

    for (int i = 0; i < count; ++i) {
        const mellin::DiffOp op = mellin::randomOperator(seed + static_cast<std::uint64_t>(i),
                                                         profile);
        const mellin::StationaryPhaseReport report =
            mellin::verify(op, std::nullopt, opts.precision);
        bool bad = false;
        for (const auto& [id, result] : report.checks) {
            const std::string name = mellin::checkName(id);
            switch (result.status) {
                case mellin::CheckStatus::Pass: ++passCounts[name]; break;
                case mellin::CheckStatus::Skipped: ++skipCounts[name]; break;
                case mellin::CheckStatus::Fail:
                    ++failCounts[name];
                    // A nonzero defect is a reported quantity, not a failure,
                    // except on the REGULAR profile where it must vanish.
                    if (id != mellin::CheckId::DimIdentity || profile.unitLeading) bad = true;
                    break;
            }
        }
        if (report.punctualDefect && *report.punctualDefect != 0) ++defectNonzero;
        if (bad) ++failures;
        if (opts.json) {
            json checks = json::object();
            for (const auto& [id, result] : report.checks)
                checks[mellin::checkName(id)] = result.str();
            results.push_back({{"seed", seed + static_cast<std::uint64_t>(i)},
                               {"operator", report.operatorText},
                               {"defect", report.punctualDefect
                                              ? json(*report.punctualDefect)
                                              : json(nullptr)},
                               {"checks", checks}});
        }
    }

    if (opts.json) {
        json summary = {{"pass", passCounts},
                        {"fail", failCounts},
                        {"skipped", skipCounts},
                        {"nonzero_defects", defectNonzero},
                        {"failures", failures}};
        json doc = {{"profile", profileName},
                    {"seed", seed},
                    {"count", count},
                    {"summary", summary},
                    {"results", results}};
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "corpus: profile " << profileName << ", seed " << seed << ", count "
                  << count << "\n";
        for (const auto& [name, n] : passCounts) {
            std::cout << "  " << name << ": " << n << " pass";
            if (failCounts.count(name)) std::cout << ", " << failCounts[name] << " fail";
            if (skipCounts.count(name)) std::cout << ", " << skipCounts[name] << " skipped";
            std::cout << "\n";
        }
        std::cout << "  nonzero defects: " << defectNonzero << "\n";
        std::cout << (failures == 0 ? "all operators verified" : "FAILURES present") << "\n";
    }
    return failures == 0 ? 0 : kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Newton polygons, local invariants and Mellin transforms of "
                 "differential operators on the punctured affine line"};
    app.require_subcommand(1);

    GlobalOpts opts;
    app.add_flag("--json", opts.json, "machine-readable JSON output");
    app.add_option("--svg", opts.svgPath, "write an SVG rendering of the polygons");
    app.add_option("--precision", opts.precision,
                   "extra guard terms for the microlocal u-precision window");

    std::string exprText;
    auto* polygonCmd = app.add_subcommand("polygon", "global Newton polygon of an operator");
    polygonCmd->add_option("expr", exprText, "operator expression")->required();
    polygonCmd->fallthrough();

    auto* mellinCmd =
        app.add_subcommand("mellin", "Mellin transform and its germ-at-infinity polygon");
    mellinCmd->add_option("expr", exprText, "operator expression")->required();
    mellinCmd->fallthrough();

    std::string atText = "0";
    auto* germCmd = app.add_subcommand("germ", "local germ and its invariants");
    germCmd->add_option("expr", exprText, "operator expression")->required();
    germCmd->add_option("--at", atText, "point: 0, inf, or a nonzero rational")->required();
    germCmd->fallthrough();

    std::optional<int> expectDefect;
    int expectDefectRaw = 0;
    auto* verifyCmd = app.add_subcommand("verify", "run the stationary-phase checks");
    verifyCmd->add_option("expr", exprText, "operator expression")->required();
    auto* expectOpt =
        verifyCmd->add_option("--expect-defect", expectDefectRaw, "expected punctual defect");
    verifyCmd->fallthrough();

    std::uint64_t seed = 1;
    int count = 10;
    std::string profileName = "SMALL";
    auto* corpusCmd = app.add_subcommand("corpus", "batch-verify random operators");
    corpusCmd->add_option("--seed", seed, "base seed");
    corpusCmd->add_option("--count", count, "number of operators");
    corpusCmd->add_option("--profile", profileName, "SMALL or REGULAR");
    corpusCmd->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return 0;  // --help
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }

    try {
        if (polygonCmd->parsed()) {
            const mellin::DiffOp op = parseOrExit(exprText);
            const mellin::NewtonPolygon N = mellin::globalPolygon(op);
            if (!opts.svgPath.empty())
                writeFileOrExit(opts.svgPath, mellin::renderPolygonsSvg({{"global", N}}));
            if (opts.json) {
                json doc = {{"operator", op.str()},
                            {"polygon", polygonJson(N)},
                            {"width", N.width().str()},
                            {"height", N.height().str()}};
                std::cout << doc.dump(2) << "\n";
            } else {
                std::cout << "operator: " << op.str() << "\n";
                printPolygonHuman(N, "global polygon");
            }
            return 0;
        }
        if (mellinCmd->parsed()) {
            const mellin::DiffOp op = parseOrExit(exprText);
            const mellin::DiffnceOp M = mellin::mellin(op);
            const mellin::DiffnceOp G = mellin::germAtInfinityOp(M);
            const mellin::NewtonPolygon N = mellin::differencePolygon(G);
            if (!opts.svgPath.empty())
                writeFileOrExit(opts.svgPath,
                                mellin::renderPolygonsSvg({{"mellin germ", N}}));
            if (opts.json) {
                json doc = {{"operator", op.str()},
                            {"mellin_operator", M.str()},
                            {"germ_at_infinity", G.str()},
                            {"polygon", polygonJson(N)},
                            {"width", N.width().str()}};
                std::cout << doc.dump(2) << "\n";
            } else {
                std::cout << "operator: " << op.str() << "\n";
                std::cout << "mellin transform: " << M.str() << "\n";
                std::cout << "germ at infinity: " << G.str() << "\n";
                printPolygonHuman(N, "difference polygon");
            }
            return 0;
        }
        if (germCmd->parsed()) {
            const mellin::DiffOp op = parseOrExit(exprText);
            const mellin::GermPoint pt = parsePoint(atText);
            const mellin::LocalDiffOp germ = mellin::germAt(op, pt);
            const mellin::GermReport gr = mellin::invariants(germ, pt);
            const mellin::NewtonPolygon N = mellin::localDiffPolygon(germ);
            if (!opts.svgPath.empty())
                writeFileOrExit(opts.svgPath,
                                mellin::renderPolygonsSvg({{"local at " + pt.str(), N}}));
            if (opts.json) {
                json slopes = json::array();
                for (const auto& s : gr.slopes)
                    slopes.push_back({{"slope", s.slope.str()}, {"width", s.width.str()}});
                json doc = {{"operator", op.str()},     {"point", pt.str()},
                            {"germ", germ.str()},       {"dim", gr.dim},
                            {"irr", gr.irr},            {"mu", gr.mu},
                            {"slopes", slopes}};
                std::cout << doc.dump(2) << "\n";
            } else {
                std::cout << "operator: " << op.str() << "\n";
                std::cout << "germ at " << pt.str() << ": " << germ.str() << "\n";
                std::cout << "dim " << gr.dim << ", irr " << gr.irr << ", mu " << gr.mu
                          << "\n";
            }
            return 0;
        }
        if (verifyCmd->parsed()) {
            if (expectOpt->count() > 0) expectDefect = expectDefectRaw;
            return runVerify(exprText, expectDefect, opts);
        }
        if (corpusCmd->parsed()) return runCorpus(seed, count, profileName, opts);
    } catch (const mellin::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
