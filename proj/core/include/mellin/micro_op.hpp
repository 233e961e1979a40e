#ifndef MELLIN_MICRO_OP_HPP
#define MELLIN_MICRO_OP_HPP

#include <string>
#include <vector>

#include "mellin/germs.hpp"
#include "mellin/local_diff_op.hpp"
#include "mellin/truncated_series.hpp"

namespace mellin {

// Selects the derivation the twisted product is built from:
// delta_s = -(u+s) d/du for a rational s, or delta_inf = u d/du.
struct DerivationTag {
    enum class Kind { DeltaS, DeltaInf };
    Kind kind;
    Rational s;

    static DerivationTag deltaS(const Rational& s) { return {Kind::DeltaS, s}; }
    static DerivationTag deltaInf() { return {Kind::DeltaInf, Rational(0)}; }

    bool operator==(const DerivationTag& o) const {
        return kind == o.kind && (kind != Kind::DeltaS || s == o.s);
    }

    TruncatedSeries apply(const TruncatedSeries& f) const;
    std::string str() const;
};

// Truncated microdifference operator: sum of a_i(u) eta^e over eta-exponents
// e in a window [bottom, top]. Levels above the window top are exactly zero
// (the element has finite degree); levels below the bottom are unknown, and
// reading them is a hard error. Coefficients are truncated series carrying
// their own u-precision, so every result knows exactly what it certifies.
class MicroOp {
  public:
    // coeffs[k] is the coefficient of eta^(bottom + k); coeffs must be nonempty.
    MicroOp(DerivationTag tag, int bottom, std::vector<TruncatedSeries> coeffs);

    static MicroOp fromSeries(DerivationTag tag, const TruncatedSeries& f, int etaExp,
                              int bottom);
    static MicroOp zero(DerivationTag tag, int bottom, int top);

    const DerivationTag& tag() const { return tag_; }
    int bottom() const { return bottom_; }
    int top() const { return bottom_ + static_cast<int>(coeffs_.size()) - 1; }
    int depth() const { return static_cast<int>(coeffs_.size()); }

    // Coefficient of eta^level. Above the window: exact zero. Below it:
    // InsufficientPrecisionError.
    const TruncatedSeries& coeffAt(int level) const;

    // True when every tracked coefficient is zero as far as it is certified.
    bool isZeroUpToTruncation() const;
    // Largest level with a known nonzero coefficient. Throws
    // InsufficientPrecisionError if a fuzzy (zero-up-to-finite-precision)
    // level blocks the scan, ZeroOperatorError if everything is zero.
    int topDegree() const;
    const TruncatedSeries& leadingCoeff() const { return coeffAt(topDegree()); }

    MicroOp operator-() const;
    MicroOp operator+(const MicroOp& o) const;
    MicroOp operator-(const MicroOp& o) const;
    MicroOp scaled(const Rational& c) const;
    // Restrict the certified window from below.
    MicroOp clampedBottom(int newBottom) const;

    std::string str() const;

  private:
    DerivationTag tag_;
    int bottom_;
    std::vector<TruncatedSeries> coeffs_;
};

// Twisted product P o Q = sum_a (1/a!) d_eta^a(P) . delta^a(Q). Each output
// level only receives finitely many terms; the certified output window is
// the intersection rule window of the operands. Throws TagMismatchError and
// EmptyWindowError.
MicroOp microProduct(const MicroOp& P, const MicroOp& Q);

struct MicroDivision {
    MicroOp quotient;
    MicroOp remainder;
};

// Division with remainder: S = Q o P + R within the certified truncation,
// deg R <= deg S, deg Q <= deg S - deg P, and R = sum_{j<v} u^j R_j with
// R_j in k[[eta^-1]] where v is the u-valuation of the leading coefficient
// of P (required >= 0). Throws InsufficientPrecisionError when the leading
// coefficient is fuzzy or a remainder slice cannot be certified.
MicroDivision microDivide(const MicroOp& S, const MicroOp& P);

struct MicroWindow {
    int depth;        // tracked eta-levels below the top degree
    int uPrecision;   // exclusive exponent bound certified for u-series
};

// Default window for a normalized local operator: d + 2 levels and
// ord(a_d) + d + 8 guard terms of u-precision.
MicroWindow defaultMicroWindow(const LocalDiffOp& L, int extraGuard = 0);

// Image of a normalized local operator under the point's microlocalization:
// x -> u and (x d/dx) -> -eta at 0, -u/(u+s) eta at a finite s, eta at
// infinity, with all products taken under the matching derivation tag.
MicroOp microLocalize(const LocalDiffOp& L, const GermPoint& point,
                      const MicroWindow& window);

// u-valuation of the leading eta-coefficient of the microlocalization: the
// number of remainder slots the division theorem leaves, i.e. the dimension
// of the local Mellin transform over k((theta)).
int localMellinDim(const LocalDiffOp& L, const GermPoint& point, int extraGuard = 0);

}  // namespace mellin

#endif
