#include "mellin/diffnce_op.hpp"

#include <sstream>

#include "mellin/errors.hpp"

namespace mellin {

int DiffnceOp::minPhiDegree() const {
    if (terms_.empty()) throw ZeroOperatorError();
    return terms_.begin()->first.first;
}

int DiffnceOp::maxPhiDegree() const {
    if (terms_.empty()) throw ZeroOperatorError();
    return terms_.rbegin()->first.first;
}

LaurentPolynomial DiffnceOp::phiCoefficient(int i) const {
    LaurentPolynomial p;
    for (auto it = terms_.lower_bound({i, 0}); it != terms_.end() && it->first.first == i;
         ++it)
        p.insertTerm(it->first.second, it->second);
    return p;
}

DiffnceOp DiffnceOp::operator-() const {
    DiffnceOp r;
    for (const auto& [key, c] : terms_) r.terms_[key] = -c;
    return r;
}

DiffnceOp DiffnceOp::operator+(const DiffnceOp& o) const {
    DiffnceOp r = *this;
    for (const auto& [key, c] : o.terms_) r.insertTerm(key.first, key.second, c);
    return r;
}

DiffnceOp DiffnceOp::operator-(const DiffnceOp& o) const { return *this + (-o); }

DiffnceOp DiffnceOp::scaled(const Rational& c) const {
    DiffnceOp r;
    if (c.isZero()) return r;
    for (const auto& [key, v] : terms_) r.terms_[key] = v * c;
    return r;
}

std::string DiffnceOp::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = maxPhiDegree(); i >= minPhiDegree(); --i) {
        LaurentPolynomial p = phiCoefficient(i);
        if (p.isZero()) continue;
        bool negated = false;
        if (!first && p.leadingCoeff().sign() < 0) {
            negated = true;
            p = -p;
        }
        os << (first ? "" : (negated ? " - " : " + "));
        first = false;
        if (i == 0) {
            os << (p.isMonomial() || p.isConstant() ? p.str("n") : "(" + p.str("n") + ")");
            continue;
        }
        if (p == LaurentPolynomial(Rational(1))) {
            // unit coefficient
        } else if (p.isMonomial()) {
            os << p.str("n") << "*";
        } else {
            os << "(" << p.str("n") << ")*";
        }
        os << "F";
        if (i != 1) os << "^" << i;
    }
    return os.str();
}

DiffnceOp mulDiffnceOp(const DiffnceOp& P, const DiffnceOp& Q) {
    DiffnceOp out;
    for (const auto& [kp, cp] : P.terms()) {
        const auto [i, e] = kp;
        for (const auto& [kq, cq] : Q.terms()) {
            const auto [iota, eps] = kq;
            // eta^e Phi^i eta^eps Phi^iota = eta^e (eta + i)^eps Phi^(i+iota)
            const Rational c = cp * cq;
            for (int b = 0; b <= eps; ++b)
                out.insertTerm(i + iota, e + b,
                               c * binomial(eps, b) * Rational(i).pow(eps - b));
        }
    }
    return out;
}

DiffnceOp leftMulPhiPower(int k, const DiffnceOp& P) {
    DiffnceOp out;
    for (const auto& [key, c] : P.terms()) {
        const auto [i, e] = key;
        // Phi^k eta^e = (eta + k)^e Phi^k
        for (int b = 0; b <= e; ++b)
            out.insertTerm(i + k, b, c * binomial(e, b) * Rational(k).pow(e - b));
    }
    return out;
}

DiffnceOp powDiffnceOp(const DiffnceOp& P, unsigned e) {
    DiffnceOp result = DiffnceOp::constant(Rational(1));
    DiffnceOp base = P;
    while (e > 0) {
        if (e & 1u) result = mulDiffnceOp(result, base);
        base = mulDiffnceOp(base, base);
        e >>= 1u;
    }
    return result;
}

}  // namespace mellin
