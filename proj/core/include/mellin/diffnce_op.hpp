#ifndef MELLIN_DIFFNCE_OP_HPP
#define MELLIN_DIFFNCE_OP_HPP

#include <map>
#include <string>
#include <utility>

#include "mellin/laurent_polynomial.hpp"
#include "mellin/rational.hpp"

namespace mellin {

// Normal-ordered difference operator in k[eta]<Phi, Phi^-1>: a finite sum
// of terms c * eta^e * Phi^i with all Phi-powers to the right. Phi is
// invertible, so i runs over all integers; e is a non-negative eta power.
// Normal order is maintained through Phi^i f(eta) = f(eta + i) Phi^i.
class DiffnceOp {
  public:
    using Key = std::pair<int, int>;  // (i: Phi exponent, e: eta power)

    DiffnceOp() = default;

    static DiffnceOp constant(const Rational& c) {
        DiffnceOp op;
        op.insertTerm(0, 0, c);
        return op;
    }
    static DiffnceOp term(const Rational& c, int phiExp, int etaPow) {
        DiffnceOp op;
        op.insertTerm(phiExp, etaPow, c);
        return op;
    }

    const std::map<Key, Rational>& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }

    int minPhiDegree() const;
    int maxPhiDegree() const;
    // Coefficient of Phi^i as a polynomial in eta (non-negative support).
    LaurentPolynomial phiCoefficient(int i) const;

    DiffnceOp operator-() const;
    DiffnceOp operator+(const DiffnceOp& o) const;
    DiffnceOp operator-(const DiffnceOp& o) const;
    DiffnceOp scaled(const Rational& c) const;

    bool operator==(const DiffnceOp& o) const { return terms_ == o.terms_; }

    void insertTerm(int phiExp, int etaPow, const Rational& c) {
        if (c.isZero()) return;
        auto [it, inserted] = terms_.emplace(Key{phiExp, etaPow}, c);
        if (!inserted) {
            it->second += c;
            if (it->second.isZero()) terms_.erase(it);
        }
    }

    std::string str() const;

  private:
    std::map<Key, Rational> terms_;
};

// Normal-ordered product via Phi^i f(eta) = f(eta + i) Phi^i, valid for
// every integer i.
DiffnceOp mulDiffnceOp(const DiffnceOp& P, const DiffnceOp& Q);

// Phi^k * P, normal-ordered. A unit multiple: the cyclic module class and
// the translation class of the Newton polygon are unchanged.
DiffnceOp leftMulPhiPower(int k, const DiffnceOp& P);

DiffnceOp powDiffnceOp(const DiffnceOp& P, unsigned e);

}  // namespace mellin

#endif
