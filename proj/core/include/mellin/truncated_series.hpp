#ifndef MELLIN_TRUNCATED_SERIES_HPP
#define MELLIN_TRUNCATED_SERIES_HPP

#include <map>
#include <string>

#include "mellin/laurent_polynomial.hpp"
#include "mellin/rational.hpp"

namespace mellin {

// Truncated Laurent series with explicit precision bookkeeping.
//
// A value knows its coefficients for exponents below `precision()`
// (exclusive bound); everything at or above that bound is unknown and any
// attempt to read it is a hard error. Values built from exact polynomials
// carry infinite precision. Every arithmetic operation computes the exact
// guaranteed precision of its result by the interval rule; precision is
// never global state.
class TruncatedSeries {
  public:
    // Sentinel: precisions at or above this bound mean "exact".
    static constexpr int kInfinitePrecision = 1 << 28;
    // Sentinel valuation of a series with no known nonzero coefficient.
    static constexpr int kInfiniteValuation = 1 << 28;

    TruncatedSeries() : prec_(kInfinitePrecision) {}

    static TruncatedSeries zero(int precision = kInfinitePrecision);
    static TruncatedSeries fromPolynomial(const LaurentPolynomial& p,
                                          int precision = kInfinitePrecision);
    static TruncatedSeries monomial(const Rational& c, int exponent,
                                    int precision = kInfinitePrecision);

    int precision() const { return prec_; }
    bool isExact() const { return prec_ >= kInfinitePrecision; }

    // kInfiniteValuation when no nonzero coefficient is known.
    int valuation() const {
        return coeffs_.empty() ? kInfiniteValuation : coeffs_.begin()->first;
    }
    bool isZeroUpToPrecision() const { return coeffs_.empty(); }

    // Throws InsufficientPrecisionError at or above the precision bound.
    Rational coeff(int exponent) const;

    const std::map<int, Rational>& knownCoeffs() const { return coeffs_; }

    TruncatedSeries operator-() const;
    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator-(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const TruncatedSeries& o) const;
    TruncatedSeries scaled(const Rational& c) const;
    TruncatedSeries shifted(int k) const;  // multiply by x^k
    TruncatedSeries truncated(int precision) const;
    TruncatedSeries derivative() const;  // d/dx; costs one unit of precision
    TruncatedSeries pow(unsigned e) const;

    // Structural equality: same known coefficients and same precision.
    bool operator==(const TruncatedSeries& o) const {
        return prec_ == o.prec_ && coeffs_ == o.coeffs_;
    }

    // The only sanctioned way to compare against zero-up-to-precision data:
    // both operands must be certified at least to `precision`.
    bool equalUpTo(const TruncatedSeries& o, int precision) const;

    std::string str(const std::string& var = "x") const;

  private:
    std::map<int, Rational> coeffs_;  // nonzero values, keys < prec_
    int prec_;

    void insert(int exponent, const Rational& c) {
        if (c.isZero() || exponent >= prec_) return;
        auto [it, inserted] = coeffs_.emplace(exponent, c);
        if (!inserted) {
            it->second += c;
            if (it->second.isZero()) coeffs_.erase(it);
        }
    }

    friend TruncatedSeries invert(const TruncatedSeries&, int);
};

// Multiplicative inverse. The result is certified to
// min(input precision - 2*valuation, targetPrecision); an exact input that
// is not a monomial requires a finite targetPrecision. Throws
// DivisionByZeroSeriesError on a zero-up-to-precision input.
TruncatedSeries invert(const TruncatedSeries& a,
                       int targetPrecision = TruncatedSeries::kInfinitePrecision);

// a(x/(1+x)) truncated at `precision`. Preserves the valuation of a.
// Precondition: precision >= valuation of a.
TruncatedSeries substituteMobius(const TruncatedSeries& a, int precision);

}  // namespace mellin

#endif
