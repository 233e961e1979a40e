#include "mellin/truncated_series.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "mellin/errors.hpp"

namespace mellin {

namespace {

constexpr int kInf = TruncatedSeries::kInfinitePrecision;

// Saturating sum of precision/valuation bounds.
int boundAdd(int a, int b) {
    if (a >= kInf || b >= kInf) return kInf;
    long long s = static_cast<long long>(a) + b;
    if (s >= kInf) return kInf;
    if (s <= -static_cast<long long>(kInf)) return -kInf;
    return static_cast<int>(s);
}

}  // namespace

TruncatedSeries TruncatedSeries::zero(int precision) {
    TruncatedSeries s;
    s.prec_ = precision;
    return s;
}

TruncatedSeries TruncatedSeries::fromPolynomial(const LaurentPolynomial& p,
                                                int precision) {
    TruncatedSeries s;
    s.prec_ = precision;
    for (const auto& [e, c] : p.support())
        if (e < precision) s.coeffs_[e] = c;
    return s;
}

TruncatedSeries TruncatedSeries::monomial(const Rational& c, int exponent,
                                          int precision) {
    TruncatedSeries s;
    s.prec_ = precision;
    if (!c.isZero() && exponent < precision) s.coeffs_[exponent] = c;
    return s;
}

Rational TruncatedSeries::coeff(int exponent) const {
    if (exponent >= prec_)
        throw InsufficientPrecisionError("coefficient at exponent " +
                                         std::to_string(exponent) +
                                         " is beyond the certified precision " +
                                         std::to_string(prec_));
    auto it = coeffs_.find(exponent);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries r = zero(prec_);
    for (const auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
    return r;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
    TruncatedSeries r = zero(std::min(prec_, o.prec_));
    for (const auto& [e, c] : coeffs_) r.insert(e, c);
    for (const auto& [e, c] : o.coeffs_) r.insert(e, c);
    return r;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
    TruncatedSeries r = zero(std::min(prec_, o.prec_));
    for (const auto& [e, c] : coeffs_) r.insert(e, c);
    for (const auto& [e, c] : o.coeffs_) r.insert(e, -c);
    return r;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    // The first unknown exponent of the product is reached by pairing an
    // unknown tail of one factor with the lowest term of the other. A factor
    // with no known nonzero term contributes from its precision bound on.
    const int effValA = coeffs_.empty() ? prec_ : valuation();
    const int effValB = o.coeffs_.empty() ? o.prec_ : o.valuation();
    const int prec = std::min(boundAdd(prec_, effValB), boundAdd(o.prec_, effValA));
    TruncatedSeries r = zero(prec);
    for (const auto& [e1, c1] : coeffs_)
        for (const auto& [e2, c2] : o.coeffs_) r.insert(e1 + e2, c1 * c2);
    return r;
}

TruncatedSeries TruncatedSeries::scaled(const Rational& c) const {
    TruncatedSeries r = zero(prec_);
    if (c.isZero()) return r;
    for (const auto& [e, v] : coeffs_) r.coeffs_[e] = v * c;
    return r;
}

TruncatedSeries TruncatedSeries::shifted(int k) const {
    TruncatedSeries r = zero(boundAdd(prec_, k));
    for (const auto& [e, v] : coeffs_) r.coeffs_[e + k] = v;
    return r;
}

TruncatedSeries TruncatedSeries::truncated(int precision) const {
    TruncatedSeries r = zero(std::min(prec_, precision));
    for (const auto& [e, v] : coeffs_)
        if (e < r.prec_) r.coeffs_[e] = v;
    return r;
}

TruncatedSeries TruncatedSeries::derivative() const {
    TruncatedSeries r = zero(boundAdd(prec_, -1));
    for (const auto& [e, v] : coeffs_) r.insert(e - 1, v * Rational(e));
    return r;
}

TruncatedSeries TruncatedSeries::pow(unsigned e) const {
    TruncatedSeries result = fromPolynomial(LaurentPolynomial(Rational(1)));
    TruncatedSeries base = *this;
    while (e > 0) {
        if (e & 1u) result = result * base;
        base = base * base;
        e >>= 1u;
    }
    return result;
}

bool TruncatedSeries::equalUpTo(const TruncatedSeries& o, int precision) const {
    if (prec_ < precision || o.prec_ < precision)
        throw InsufficientPrecisionError(
            "comparison up to precision " + std::to_string(precision) +
            " exceeds the certified window of an operand");
    auto below = [precision](const std::map<int, Rational>& m) {
        std::map<int, Rational> r;
        for (const auto& [e, c] : m)
            if (e < precision) r.emplace(e, c);
        return r;
    };
    return below(coeffs_) == below(o.coeffs_);
}

std::string TruncatedSeries::str(const std::string& var) const {
    std::ostringstream os;
    if (coeffs_.empty()) {
        os << "0";
    } else {
        LaurentPolynomial p;
        for (const auto& [e, c] : coeffs_) p.insertTerm(e, c);
        os << p.str(var);
    }
    if (!isExact()) os << " + O(" << var << "^" << prec_ << ")";
    return os.str();
}

TruncatedSeries invert(const TruncatedSeries& a, int targetPrecision) {
    if (a.coeffs_.empty()) throw DivisionByZeroSeriesError();
    const int v = a.valuation();
    const Rational lead = a.coeffs_.begin()->second;

    // Monomial inverse is exact.
    if (a.coeffs_.size() == 1 && a.isExact()) {
        return TruncatedSeries::monomial(lead.inverse(), -v,
                                         std::min(targetPrecision, kInf));
    }

    int prec = targetPrecision;
    if (!a.isExact()) {
        // Output coefficient at exponent m needs input coefficients up to
        // exponent m + 2v, so certification stops at precision - 2v.
        prec = std::min(prec, a.precision() - 2 * v);
    }
    if (prec >= kInf)
        throw Error("inverting an exact non-monomial series needs a finite target precision");

    TruncatedSeries r = TruncatedSeries::zero(prec);
    const Rational leadInv = lead.inverse();
    // b_{-v+n} determined recursively from the convolution being 1.
    std::map<int, Rational> b;
    const int terms = prec + v;  // exponents -v .. prec-1
    for (int n = 0; n < terms; ++n) {
        if (n == 0) {
            b[-v] = leadInv;
            continue;
        }
        Rational acc(0);
        for (int k = 1; k <= n; ++k) {
            auto ia = a.coeffs_.find(v + k);
            if (ia == a.coeffs_.end()) continue;
            auto ib = b.find(n - k - v);
            if (ib == b.end()) continue;
            acc += ia->second * ib->second;
        }
        if (!acc.isZero()) b[n - v] = -leadInv * acc;
    }
    for (const auto& [e, c] : b) r.insert(e, c);
    return r;
}

TruncatedSeries substituteMobius(const TruncatedSeries& a, int precision) {
    const int prec = std::min(precision, a.precision());
    if (a.isZeroUpToPrecision()) return TruncatedSeries::zero(prec);
    const int v = a.valuation();
    if (precision < v)
        throw Error("substitution precision below the valuation of the input");

    // x/(1+x) has valuation 1 and unit leading coefficient, so the term
    // a_v * m^v dominates and the result keeps the valuation v exactly.
    const int guard = prec + std::abs(v) + 4;
    const LaurentPolynomial one(Rational(1));
    const LaurentPolynomial x = LaurentPolynomial::variable();
    const TruncatedSeries mobius =
        TruncatedSeries::fromPolynomial(x) *
        invert(TruncatedSeries::fromPolynomial(one + x), guard);
    // m^-1 = x^-1 (1 + x) is an exact Laurent polynomial.
    const LaurentPolynomial mobiusInvPoly = (one + x).shifted(-1);

    TruncatedSeries pw =
        v >= 0 ? mobius.pow(static_cast<unsigned>(v))
               : TruncatedSeries::fromPolynomial(
                     mobiusInvPoly.pow(static_cast<unsigned>(-v)));
    int cur = v;
    TruncatedSeries acc = TruncatedSeries::zero();
    for (const auto& [e, c] : a.knownCoeffs()) {
        if (e >= prec) break;
        while (cur < e) {
            pw = pw * mobius;
            ++cur;
        }
        acc = acc + pw.scaled(c);
    }
    return acc.truncated(prec);
}

}  // namespace mellin
