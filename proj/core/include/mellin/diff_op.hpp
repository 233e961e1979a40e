#ifndef MELLIN_DIFF_OP_HPP
#define MELLIN_DIFF_OP_HPP

#include <map>
#include <string>
#include <utility>

#include "mellin/laurent_polynomial.hpp"
#include "mellin/rational.hpp"

namespace mellin {

// Which monomial basis a DiffOp is written in:
//   Theta: z^r * T^j with T = z d/dz
//   D:     z^r * d^i with d = d/dz
enum class Presentation { Theta, D };

// Normal-ordered operator in the localized Weyl algebra k[z,z^-1]<d/dz>.
// Terms are kept with all z-powers to the left of all T- or d-powers; the
// key is (z-exponent, operator power) and no zero coefficients are stored.
class DiffOp {
  public:
    using Key = std::pair<int, int>;  // (r, j): z^r T^j  or  z^r d^j

    DiffOp() : pres_(Presentation::Theta) {}
    explicit DiffOp(Presentation p) : pres_(p) {}

    static DiffOp constant(const Rational& c, Presentation p = Presentation::Theta) {
        DiffOp op(p);
        op.insertTerm(0, 0, c);
        return op;
    }
    static DiffOp term(const Rational& c, int zExp, int opPow,
                       Presentation p = Presentation::Theta) {
        DiffOp op(p);
        op.insertTerm(zExp, opPow, c);
        return op;
    }

    Presentation presentation() const { return pres_; }
    const std::map<Key, Rational>& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }

    // Largest T- (resp. d-) power present. Throws ZeroOperatorError on 0.
    int opDegree() const;
    // Coefficient of T^j (resp. d^j) as a Laurent polynomial in z.
    LaurentPolynomial opCoefficient(int j) const;
    LaurentPolynomial leadingOpCoefficient() const { return opCoefficient(opDegree()); }
    // Smallest and largest z-exponent present.
    int minZExp() const;
    int maxZExp() const;

    DiffOp operator-() const;
    DiffOp operator+(const DiffOp& o) const;
    DiffOp operator-(const DiffOp& o) const;
    DiffOp scaled(const Rational& c) const;
    // Multiply by z^k on the left (a unit; does not touch operator powers).
    DiffOp leftMulZPower(int k) const;

    bool operator==(const DiffOp& o) const {
        return pres_ == o.pres_ && terms_ == o.terms_;
    }

    void insertTerm(int zExp, int opPow, const Rational& c) {
        if (c.isZero()) return;
        auto [it, inserted] = terms_.emplace(Key{zExp, opPow}, c);
        if (!inserted) {
            it->second += c;
            if (it->second.isZero()) terms_.erase(it);
        }
    }

    std::string str() const;

  private:
    Presentation pres_;
    std::map<Key, Rational> terms_;
};

// Normal-ordered product. Operands in different presentations are brought
// to the presentation of P first. In T-form the reordering rule is
// T z^r = z^r (T + r); in D-form it is the iterated Leibniz rule
// d^i z^r = sum_b C(i,b) r(r-1)...(r-b+1) z^(r-b) d^(i-b).
DiffOp mulDiffOp(const DiffOp& P, const DiffOp& Q);

// T-to-D expands T^j with Stirling numbers of the second kind; D-to-T uses
// z^n d^n = T(T-1)...(T-n+1). The two directions are mutually inverse.
DiffOp convertPresentation(const DiffOp& P, Presentation target);

DiffOp powDiffOp(const DiffOp& P, unsigned e);

// Stirling numbers of the second kind S(n,k), memoized.
Rational stirling2(int n, int k);
// Coefficients of T(T-1)...(T-n+1) in T^k (signed Stirling numbers of the
// first kind), memoized; entry [k] of the returned row.
Rational fallingFactorialCoeff(int n, int k);

}  // namespace mellin

#endif
