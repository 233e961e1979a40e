#ifndef MELLIN_LAURENT_POLYNOMIAL_HPP
#define MELLIN_LAURENT_POLYNOMIAL_HPP

#include <map>
#include <set>
#include <string>

#include "mellin/rational.hpp"

namespace mellin {

// Univariate Laurent polynomial over the rationals: a finite map from
// integer exponents to nonzero coefficients. The zero polynomial has an
// empty support; valuation and degree are derived, never stored.
class LaurentPolynomial {
  public:
    LaurentPolynomial() = default;
    explicit LaurentPolynomial(const Rational& c) {
        if (!c.isZero()) support_[0] = c;
    }

    static LaurentPolynomial monomial(const Rational& c, int exponent) {
        LaurentPolynomial p;
        if (!c.isZero()) p.support_[exponent] = c;
        return p;
    }
    static LaurentPolynomial variable() { return monomial(Rational(1), 1); }

    bool isZero() const { return support_.empty(); }
    bool isConstant() const {
        return support_.empty() || (support_.size() == 1 && support_.begin()->first == 0);
    }
    // Single term c*t^e?
    bool isMonomial() const { return support_.size() == 1; }

    int valuation() const;  // throws ZeroPolynomialError on 0
    int degree() const;     // throws ZeroPolynomialError on 0
    Rational leadingCoeff() const;
    Rational trailingCoeff() const;
    Rational coeff(int exponent) const {
        auto it = support_.find(exponent);
        return it == support_.end() ? Rational(0) : it->second;
    }

    const std::map<int, Rational>& support() const { return support_; }

    LaurentPolynomial operator-() const;
    LaurentPolynomial operator+(const LaurentPolynomial& o) const;
    LaurentPolynomial operator-(const LaurentPolynomial& o) const;
    LaurentPolynomial operator*(const LaurentPolynomial& o) const;
    LaurentPolynomial scaled(const Rational& c) const;
    LaurentPolynomial shifted(int k) const;  // multiply by t^k
    LaurentPolynomial pow(unsigned e) const;

    bool operator==(const LaurentPolynomial& o) const { return support_ == o.support_; }
    bool operator!=(const LaurentPolynomial& o) const { return support_ != o.support_; }

    // Exact evaluation; a negative valuation requires x != 0.
    Rational evaluate(const Rational& x) const;

    // t -> t + s. Only defined for an ordinary polynomial (valuation >= 0).
    LaurentPolynomial substituteShift(const Rational& s) const;

    std::string str(const std::string& var = "t") const;

    void insertTerm(int exponent, const Rational& c) {
        if (c.isZero()) return;
        auto [it, inserted] = support_.emplace(exponent, c);
        if (!inserted) {
            it->second += c;
            if (it->second.isZero()) support_.erase(it);
        }
    }

  private:
    std::map<int, Rational> support_;
};

struct RationalRootsResult {
    std::set<Rational> roots;  // each root once, multiplicity ignored, 0 excluded
    int residualDegree = 0;    // degree of the factor with no rational roots
};

// All rational roots of p, found by the rational-root theorem after
// clearing denominators. The root 0 arising from the Laurent valuation is
// never reported. Throws ZeroPolynomialError when p = 0.
RationalRootsResult rationalRoots(const LaurentPolynomial& p);

}  // namespace mellin

#endif
