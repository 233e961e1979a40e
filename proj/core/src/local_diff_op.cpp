#include "mellin/local_diff_op.hpp"

#include <sstream>

#include "mellin/errors.hpp"

namespace mellin {

LocalDiffOp::LocalDiffOp(std::vector<LaurentPolynomial> coeffs)
    : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back().isZero()) coeffs_.pop_back();
}

int LocalDiffOp::degree() const {
    if (coeffs_.empty()) throw ZeroOperatorError();
    return static_cast<int>(coeffs_.size()) - 1;
}

const LaurentPolynomial& LocalDiffOp::coeff(int i) const {
    static const LaurentPolynomial kZero;
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[static_cast<std::size_t>(i)];
}

LaurentPolynomial LocalDiffOp::leadingCoeff() const {
    if (coeffs_.empty()) throw ZeroOperatorError();
    return coeffs_.back();
}

int LocalDiffOp::minValuation() const {
    if (coeffs_.empty()) throw ZeroOperatorError();
    bool seen = false;
    int v = 0;
    for (const auto& a : coeffs_) {
        if (a.isZero()) continue;
        v = seen ? std::min(v, a.valuation()) : a.valuation();
        seen = true;
    }
    return v;
}

LocalDiffOp LocalDiffOp::normalized() const {
    if (coeffs_.empty()) return *this;
    const int v = minValuation();
    if (v == 0) return *this;
    std::vector<LaurentPolynomial> shifted;
    shifted.reserve(coeffs_.size());
    for (const auto& a : coeffs_) shifted.push_back(a.shifted(-v));
    return LocalDiffOp(std::move(shifted));
}

std::string LocalDiffOp::str(const std::string& var) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const LaurentPolynomial& a = coeffs_[static_cast<std::size_t>(i)];
        if (a.isZero()) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0) {
            os << a.str(var);
            continue;
        }
        os << "(" << a.str(var) << ")*(" << var << "d" << var << ")";
        if (i != 1) os << "^" << i;
    }
    return os.str();
}

LocalDiffOp translateOp(const DiffOp& P, const Rational& s) {
    if (P.isZero()) throw ZeroOperatorError();
    if (s.isZero()) throw Error("translateOp requires a nonzero point");

    // Clear z^-1 powers by a unit so the substitution stays polynomial.
    DiffOp T = convertPresentation(P, Presentation::Theta);
    const int minR = T.minZExp();
    if (minR < 0) T = T.leftMulZPower(-minR);

    DiffOp D = convertPresentation(T, Presentation::D);
    const int d = D.opDegree();

    // p_i(x) = (d-form coefficient of d^i) with z = x + s.
    std::vector<LaurentPolynomial> p(static_cast<std::size_t>(d) + 1);
    for (int i = 0; i <= d; ++i)
        p[static_cast<std::size_t>(i)] = D.opCoefficient(i).substituteShift(s);

    // x^d sum_i p_i d^i = sum_i p_i x^(d-i) (x^i d^i)
    //                   = sum_i p_i x^(d-i) T(T-1)...(T-i+1)
    std::vector<LaurentPolynomial> a(static_cast<std::size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) {
        if (p[static_cast<std::size_t>(i)].isZero()) continue;
        const LaurentPolynomial base = p[static_cast<std::size_t>(i)].shifted(d - i);
        for (int k = 0; k <= i; ++k) {
            const Rational c = fallingFactorialCoeff(i, k);
            if (!c.isZero())
                a[static_cast<std::size_t>(k)] =
                    a[static_cast<std::size_t>(k)] + base.scaled(c);
        }
    }
    return LocalDiffOp(std::move(a)).normalized();
}

LocalDiffOp invertCoordinate(const DiffOp& P) {
    if (P.isZero()) throw ZeroOperatorError();
    const DiffOp T = convertPresentation(P, Presentation::Theta);
    const int d = T.opDegree();
    std::vector<LaurentPolynomial> a(static_cast<std::size_t>(d) + 1);
    for (const auto& [key, c] : T.terms()) {
        const auto [r, j] = key;
        // z^r T^j -> (-1)^j y^(-r) (y d/dy)^j
        const Rational sign = (j % 2 == 0) ? Rational(1) : Rational(-1);
        a[static_cast<std::size_t>(j)].insertTerm(-r, c * sign);
    }
    return LocalDiffOp(std::move(a)).normalized();
}

LocalDiffOp reinterpretAtZero(const DiffOp& P) {
    if (P.isZero()) throw ZeroOperatorError();
    const DiffOp T = convertPresentation(P, Presentation::Theta);
    const int d = T.opDegree();
    std::vector<LaurentPolynomial> a(static_cast<std::size_t>(d) + 1);
    for (int j = 0; j <= d; ++j) a[static_cast<std::size_t>(j)] = T.opCoefficient(j);
    return LocalDiffOp(std::move(a)).normalized();
}

}  // namespace mellin
