#include "mellin/micro_op.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "mellin/errors.hpp"

namespace mellin {

TruncatedSeries DerivationTag::apply(const TruncatedSeries& f) const {
    if (kind == Kind::DeltaInf) {
        // u d/du
        return f.derivative().shifted(1);
    }
    // -(u+s) d/du
    LaurentPolynomial uPlusS = LaurentPolynomial::variable();
    uPlusS.insertTerm(0, s);
    return -(f.derivative() * TruncatedSeries::fromPolynomial(uPlusS));
}

std::string DerivationTag::str() const {
    return kind == Kind::DeltaInf ? "delta_inf" : "delta_" + s.str();
}

MicroOp::MicroOp(DerivationTag tag, int bottom, std::vector<TruncatedSeries> coeffs)
    : tag_(tag), bottom_(bottom), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw EmptyWindowError();
}

MicroOp MicroOp::fromSeries(DerivationTag tag, const TruncatedSeries& f, int etaExp,
                            int bottom) {
    if (bottom > etaExp) throw EmptyWindowError();
    std::vector<TruncatedSeries> coeffs(static_cast<std::size_t>(etaExp - bottom) + 1);
    coeffs.back() = f;
    return MicroOp(tag, bottom, std::move(coeffs));
}

MicroOp MicroOp::zero(DerivationTag tag, int bottom, int top) {
    if (bottom > top) throw EmptyWindowError();
    return MicroOp(tag, bottom,
                   std::vector<TruncatedSeries>(static_cast<std::size_t>(top - bottom) + 1));
}

const TruncatedSeries& MicroOp::coeffAt(int level) const {
    static const TruncatedSeries kExactZero;
    if (level > top()) return kExactZero;
    if (level < bottom_)
        throw InsufficientPrecisionError("eta-level " + std::to_string(level) +
                                         " is below the certified window bottom " +
                                         std::to_string(bottom_));
    return coeffs_[static_cast<std::size_t>(level - bottom_)];
}

bool MicroOp::isZeroUpToTruncation() const {
    for (const auto& c : coeffs_)
        if (!c.isZeroUpToPrecision()) return false;
    return true;
}

int MicroOp::topDegree() const {
    for (int level = top(); level >= bottom_; --level) {
        const TruncatedSeries& c = coeffs_[static_cast<std::size_t>(level - bottom_)];
        if (!c.isZeroUpToPrecision()) return level;
        if (!c.isExact())
            throw InsufficientPrecisionError(
                "leading coefficient is zero up to u-precision " +
                std::to_string(c.precision()) + " at eta-level " + std::to_string(level));
    }
    throw ZeroOperatorError();
}

MicroOp MicroOp::operator-() const {
    MicroOp r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

MicroOp MicroOp::operator+(const MicroOp& o) const {
    if (!(tag_ == o.tag_)) throw TagMismatchError();
    const int newBottom = std::max(bottom_, o.bottom_);
    const int newTop = std::max(top(), o.top());
    if (newBottom > newTop) throw EmptyWindowError();
    std::vector<TruncatedSeries> coeffs;
    coeffs.reserve(static_cast<std::size_t>(newTop - newBottom) + 1);
    for (int level = newBottom; level <= newTop; ++level)
        coeffs.push_back(coeffAt(level) + o.coeffAt(level));
    return MicroOp(tag_, newBottom, std::move(coeffs));
}

MicroOp MicroOp::operator-(const MicroOp& o) const { return *this + (-o); }

MicroOp MicroOp::scaled(const Rational& c) const {
    MicroOp r = *this;
    for (auto& e : r.coeffs_) e = e.scaled(c);
    return r;
}

MicroOp MicroOp::clampedBottom(int newBottom) const {
    if (newBottom <= bottom_) return *this;
    if (newBottom > top()) throw EmptyWindowError();
    std::vector<TruncatedSeries> coeffs(coeffs_.begin() + (newBottom - bottom_),
                                        coeffs_.end());
    return MicroOp(tag_, newBottom, std::move(coeffs));
}

std::string MicroOp::str() const {
    std::ostringstream os;
    bool first = true;
    for (int level = top(); level >= bottom_; --level) {
        const TruncatedSeries& c = coeffAt(level);
        if (c.isZeroUpToPrecision() && c.isExact()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str("u") << ")";
        if (level != 0) os << "*eta^" << level;
    }
    if (first) os << "0";
    os << "  [window " << bottom_ << ".." << top() << ", " << tag_.str() << "]";
    return os.str();
}

MicroOp microProduct(const MicroOp& P, const MicroOp& Q) {
    if (!(P.tag() == Q.tag())) throw TagMismatchError();
    const int outTop = P.top() + Q.top();
    // Unknown tails: P below its bottom meets Q at levels < P.bottom + Q.top,
    // and symmetrically; everything at or above both bounds is certified.
    const int outBottom = std::max(P.bottom() + Q.top(), Q.bottom() + P.top());
    if (outBottom > outTop) throw EmptyWindowError();

    // delta^a applied to Q's coefficients, computed once per level.
    const int maxAlpha = outTop - outBottom;
    std::map<int, std::vector<TruncatedSeries>> deltas;
    for (int j = Q.bottom(); j <= Q.top(); ++j) {
        std::vector<TruncatedSeries> ds{Q.coeffAt(j)};
        for (int a = 1; a <= maxAlpha; ++a) ds.push_back(P.tag().apply(ds.back()));
        deltas.emplace(j, std::move(ds));
    }

    std::vector<TruncatedSeries> out(static_cast<std::size_t>(outTop - outBottom) + 1);
    for (int i = P.bottom(); i <= P.top(); ++i) {
        const TruncatedSeries& pi = P.coeffAt(i);
        if (pi.isZeroUpToPrecision() && pi.isExact()) continue;
        for (int j = Q.bottom(); j <= Q.top(); ++j) {
            for (int alpha = 0; alpha <= maxAlpha; ++alpha) {
                const int level = i + j - alpha;
                if (level > outTop || level < outBottom) continue;
                const Rational w = binomial(i, alpha);
                if (w.isZero()) continue;
                const TruncatedSeries term =
                    (pi * deltas.at(j)[static_cast<std::size_t>(alpha)]).scaled(w);
                auto& slot = out[static_cast<std::size_t>(level - outBottom)];
                slot = slot + term;
            }
        }
    }
    return MicroOp(P.tag(), outBottom, std::move(out));
}

namespace {

// Exact polynomial slice of f on u-exponents [0, v); requires f to be
// certified at least to v.
TruncatedSeries remainderSlice(const TruncatedSeries& f, int v) {
    if (f.precision() < v)
        throw InsufficientPrecisionError(
            "remainder slice needs u-precision " + std::to_string(v) +
            " but only " + std::to_string(f.precision()) + " is certified");
    LaurentPolynomial p;
    for (const auto& [e, c] : f.knownCoeffs())
        if (e >= 0 && e < v) p.insertTerm(e, c);
    return TruncatedSeries::fromPolynomial(p);
}

}  // namespace

MicroDivision microDivide(const MicroOp& S, const MicroOp& P) {
    if (!(S.tag() == P.tag())) throw TagMismatchError();
    const int dP = P.topDegree();
    const TruncatedSeries& lead = P.coeffAt(dP);
    const int v = lead.valuation();
    if (v < 0) throw Error("divisor leading coefficient must have u-valuation >= 0");

    // Precision cap for inverting an exact leading coefficient.
    int uCap = 0;
    bool sawFinite = false;
    auto track = [&uCap, &sawFinite](const TruncatedSeries& f) {
        if (!f.isExact()) {
            uCap = std::max(uCap, f.precision());
            sawFinite = true;
        }
    };
    for (int i = P.bottom(); i <= P.top(); ++i) track(P.coeffAt(i));
    for (int e = S.bottom(); e <= S.top(); ++e) track(S.coeffAt(e));
    const int invTarget = sawFinite ? uCap + 2 * std::abs(v) + 4 : 48;
    const TruncatedSeries leadInv = invert(lead, invTarget);

    // Corrections from killing level e are certified above e - depth(P).
    const int bottomCert = std::max(S.bottom(), S.top() - P.depth() + 1);

    std::map<int, TruncatedSeries> work;
    for (int e = bottomCert; e <= S.top(); ++e) work.emplace(e, S.coeffAt(e));

    std::map<int, TruncatedSeries> qSlices;
    std::map<int, TruncatedSeries> rSlices;

    // delta^a of P's coefficients, shared across the level loop.
    const int maxAlpha = S.top() - bottomCert;
    std::map<int, std::vector<TruncatedSeries>> deltas;
    for (int i = P.bottom(); i <= P.top(); ++i) {
        std::vector<TruncatedSeries> ds{P.coeffAt(i)};
        for (int a = 1; a <= maxAlpha; ++a) ds.push_back(P.tag().apply(ds.back()));
        deltas.emplace(i, std::move(ds));
    }

    for (int e = S.top(); e >= bottomCert; --e) {
        const TruncatedSeries cur = work.at(e);
        TruncatedSeries rem = TruncatedSeries::fromPolynomial(LaurentPolynomial());
        if (e <= 0 && v > 0) rem = remainderSlice(cur, v);
        if (e <= 0) rSlices.emplace(e, rem);

        const TruncatedSeries f = cur - rem;
        const TruncatedSeries q = f * leadInv;
        qSlices.emplace(e - dP, q);
        if (f.isZeroUpToPrecision() && f.isExact()) continue;

        // Subtract (q eta^(e-dP)) o P at the levels still to be processed.
        for (int i = P.bottom(); i <= P.top(); ++i) {
            for (int alpha = 0; alpha <= maxAlpha; ++alpha) {
                const int level = (e - dP) + i - alpha;
                if (level >= e || level < bottomCert) continue;
                const Rational w = binomial(e - dP, alpha);
                if (w.isZero()) continue;
                const TruncatedSeries term =
                    (q * deltas.at(i)[static_cast<std::size_t>(alpha)]).scaled(w);
                auto it = work.find(level);
                it->second = it->second - term;
            }
        }
    }

    std::vector<TruncatedSeries> qCoeffs;
    for (int e = bottomCert - dP; e <= S.top() - dP; ++e) qCoeffs.push_back(qSlices.at(e));
    MicroOp quotient(S.tag(), bottomCert - dP, std::move(qCoeffs));

    const int rTop = std::max(bottomCert, std::min(S.top(), 0));
    std::vector<TruncatedSeries> rCoeffs;
    for (int e = bottomCert; e <= rTop; ++e) {
        auto it = rSlices.find(e);
        rCoeffs.push_back(it == rSlices.end()
                              ? TruncatedSeries::fromPolynomial(LaurentPolynomial())
                              : it->second);
    }
    MicroOp remainder(S.tag(), bottomCert, std::move(rCoeffs));
    return {std::move(quotient), std::move(remainder)};
}

MicroWindow defaultMicroWindow(const LocalDiffOp& L, int extraGuard) {
    const LocalDiffOp N = L.normalized();
    const int d = N.degree();
    const int ord = N.leadingCoeff().valuation();
    return {d + 2, ord + d + 8 + extraGuard};
}

MicroOp microLocalize(const LocalDiffOp& L, const GermPoint& point,
                      const MicroWindow& window) {
    if (L.isZero()) throw ZeroOperatorError();
    const LocalDiffOp N = L.normalized();
    const int d = N.degree();

    DerivationTag tag = DerivationTag::deltaInf();
    if (point.kind == GermPoint::Kind::Zero) tag = DerivationTag::deltaS(Rational(0));
    if (point.kind == GermPoint::Kind::Finite) tag = DerivationTag::deltaS(point.s);

    // Generator image of (x d/dx): a single eta-level with an exact or
    // certified series coefficient.
    TruncatedSeries genCoeff;
    switch (point.kind) {
        case GermPoint::Kind::Zero:
            genCoeff = TruncatedSeries::fromPolynomial(LaurentPolynomial(Rational(-1)));
            break;
        case GermPoint::Kind::Infinity:
            genCoeff = TruncatedSeries::fromPolynomial(LaurentPolynomial(Rational(1)));
            break;
        case GermPoint::Kind::Finite: {
            if (point.s.isZero()) throw Error("finite localization point must be nonzero");
            // w(u) = -u/(u+s), valuation 1.
            LaurentPolynomial uPlusS = LaurentPolynomial::variable();
            uPlusS.insertTerm(0, point.s);
            const int wPrec = window.uPrecision + d + 2;
            genCoeff = TruncatedSeries::fromPolynomial(
                           LaurentPolynomial::monomial(Rational(-1), 1)) *
                       invert(TruncatedSeries::fromPolynomial(uPlusS), wPrec);
            break;
        }
    }

    // Window deep enough that d twisted products still certify the request.
    const int genBottom = 1 - (window.depth + d + 2);
    const MicroOp gen = MicroOp::fromSeries(tag, genCoeff, 1, genBottom);

    MicroOp acc = MicroOp::zero(tag, d - (window.depth + d + 1), d);
    MicroOp power = MicroOp::fromSeries(
        tag, TruncatedSeries::fromPolynomial(LaurentPolynomial(Rational(1))), 0,
        genBottom - 1);
    for (int i = 0; i <= d; ++i) {
        if (i > 0) power = microProduct(power, gen);
        const LaurentPolynomial& ai = N.coeff(i);
        if (ai.isZero()) continue;
        const MicroOp coeffOp = MicroOp::fromSeries(
            tag, TruncatedSeries::fromPolynomial(ai).truncated(window.uPrecision), 0,
            genBottom - 1);
        acc = acc + microProduct(coeffOp, power);
    }
    // Clamp to the requested certification window.
    const int outBottom = d - window.depth + 1;
    MicroOp out = acc.clampedBottom(std::max(acc.bottom(), outBottom));
    return out;
}

int localMellinDim(const LocalDiffOp& L, const GermPoint& point, int extraGuard) {
    if (L.isZero()) throw ZeroOperatorError();
    const LocalDiffOp N = L.normalized();
    const MicroWindow window = defaultMicroWindow(N, extraGuard);
    const MicroOp M = microLocalize(N, point, window);
    const TruncatedSeries& lead = M.coeffAt(N.degree());
    if (lead.isZeroUpToPrecision())
        throw InsufficientPrecisionError(
            "leading coefficient of the microlocalization is zero up to precision " +
            std::to_string(lead.precision()));
    return lead.valuation();
}

}  // namespace mellin
