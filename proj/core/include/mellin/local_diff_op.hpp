#ifndef MELLIN_LOCAL_DIFF_OP_HPP
#define MELLIN_LOCAL_DIFF_OP_HPP

#include <string>
#include <vector>

#include "mellin/diff_op.hpp"
#include "mellin/laurent_polynomial.hpp"

namespace mellin {

// Cyclic presentation of a differential module over k((x)): an operator
// sum_i a_i(x) (x d/dx)^i with exact Laurent-polynomial coefficients and
// a_d != 0. Exactness is guaranteed by how these are constructed (germ
// extraction never truncates), so polygon readings downstream stay exact.
class LocalDiffOp {
  public:
    LocalDiffOp() = default;  // the zero operator
    explicit LocalDiffOp(std::vector<LaurentPolynomial> coeffs);

    bool isZero() const { return coeffs_.empty(); }
    // T-degree d. Throws ZeroOperatorError on the zero operator.
    int degree() const;
    const LaurentPolynomial& coeff(int i) const;
    const std::vector<LaurentPolynomial>& coeffs() const { return coeffs_; }
    LaurentPolynomial leadingCoeff() const;

    // Smallest x-valuation over the nonzero coefficients.
    int minValuation() const;
    bool isNormalized() const { return isZero() || minValuation() == 0; }
    // Left-multiplied by x^(-minValuation), a unit of k((x)).
    LocalDiffOp normalized() const;

    bool operator==(const LocalDiffOp& o) const { return coeffs_ == o.coeffs_; }

    std::string str(const std::string& var = "x") const;

  private:
    std::vector<LaurentPolynomial> coeffs_;  // index = T-power, top entry nonzero
};

// Germ of P at a finite nonzero rational point s: clears z^-1 powers by a
// unit, converts to d-form, substitutes z = x + s exactly, left-multiplies
// by x^d and rewrites x^d d^d combinations back into (x d/dx)-form over
// k((x)). The result is normalized. Precondition: P != 0 and s != 0.
LocalDiffOp translateOp(const DiffOp& P, const Rational& s);

// Germ of P at infinity: z^r T^j maps to (-1)^j y^(-r) (y d/dy)^j, then the
// result is normalized so the minimal coefficient valuation is 0.
LocalDiffOp invertCoordinate(const DiffOp& P);

// Germ of P at 0: coefficients reinterpreted in k((z)) directly (T-form
// unchanged), then normalized.
LocalDiffOp reinterpretAtZero(const DiffOp& P);

}  // namespace mellin

#endif
