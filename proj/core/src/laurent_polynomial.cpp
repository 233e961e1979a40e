#include "mellin/laurent_polynomial.hpp"

#include <sstream>
#include <vector>

namespace mellin {

int LaurentPolynomial::valuation() const {
    if (support_.empty()) throw ZeroPolynomialError();
    return support_.begin()->first;
}

int LaurentPolynomial::degree() const {
    if (support_.empty()) throw ZeroPolynomialError();
    return support_.rbegin()->first;
}

Rational LaurentPolynomial::leadingCoeff() const {
    if (support_.empty()) throw ZeroPolynomialError();
    return support_.rbegin()->second;
}

Rational LaurentPolynomial::trailingCoeff() const {
    if (support_.empty()) throw ZeroPolynomialError();
    return support_.begin()->second;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
    LaurentPolynomial r;
    for (const auto& [e, c] : support_) r.support_[e] = -c;
    return r;
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& o) const {
    LaurentPolynomial r = *this;
    for (const auto& [e, c] : o.support_) r.insertTerm(e, c);
    return r;
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& o) const {
    LaurentPolynomial r = *this;
    for (const auto& [e, c] : o.support_) r.insertTerm(e, -c);
    return r;
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& o) const {
    LaurentPolynomial r;
    for (const auto& [e1, c1] : support_)
        for (const auto& [e2, c2] : o.support_) r.insertTerm(e1 + e2, c1 * c2);
    return r;
}

LaurentPolynomial LaurentPolynomial::scaled(const Rational& c) const {
    LaurentPolynomial r;
    if (c.isZero()) return r;
    for (const auto& [e, v] : support_) r.support_[e] = v * c;
    return r;
}

LaurentPolynomial LaurentPolynomial::shifted(int k) const {
    LaurentPolynomial r;
    for (const auto& [e, v] : support_) r.support_[e + k] = v;
    return r;
}

LaurentPolynomial LaurentPolynomial::pow(unsigned e) const {
    LaurentPolynomial result(Rational(1)), base = *this;
    while (e > 0) {
        if (e & 1u) result = result * base;
        base = base * base;
        e >>= 1u;
    }
    return result;
}

Rational LaurentPolynomial::evaluate(const Rational& x) const {
    if (support_.empty()) return Rational(0);
    if (x.isZero() && valuation() < 0)
        throw Error("Laurent polynomial with a pole cannot be evaluated at 0");
    Rational acc(0);
    for (const auto& [e, c] : support_) acc += c * x.pow(e);
    return acc;
}

LaurentPolynomial LaurentPolynomial::substituteShift(const Rational& s) const {
    LaurentPolynomial r;
    for (const auto& [e, c] : support_) {
        if (e < 0) throw Error("shift substitution needs a polynomial, got a pole");
        // (t + s)^e, expanded binomially.
        for (int k = 0; k <= e; ++k)
            r.insertTerm(k, c * binomial(e, k) * s.pow(e - k));
    }
    return r;
}

std::string LaurentPolynomial::str(const std::string& var) const {
    if (support_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Highest exponent first. A leading negative term keeps its sign inside
    // the coefficient so the output re-parses without unary minus.
    for (auto it = support_.rbegin(); it != support_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational a = c;
        if (!first) {
            os << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0) a = -a;
        }
        first = false;
        if (e == 0) {
            os << a.str();
        } else {
            if (a != Rational(1)) os << a.str() << "*";
            os << var;
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

namespace {

std::vector<mpz_class> positiveDivisors(mpz_class n) {
    if (n < 0) n = -n;
    std::vector<mpz_class> divs;
    mpz_class i = 1;
    for (; i * i <= n; ++i) {
        if (n % i == 0) {
            divs.push_back(i);
            mpz_class j = n / i;
            if (j != i) divs.push_back(j);
        }
    }
    return divs;
}

// Divides p (an ordinary polynomial) by (t - r); returns the quotient and
// whether the division was exact.
std::pair<LaurentPolynomial, bool> divideByLinear(const LaurentPolynomial& p,
                                                  const Rational& r) {
    const int d = p.degree();
    std::vector<Rational> dense(static_cast<std::size_t>(d) + 1, Rational(0));
    for (const auto& [e, c] : p.support()) dense[static_cast<std::size_t>(e)] = c;
    LaurentPolynomial q;
    Rational carry(0);
    for (int e = d; e >= 1; --e) {
        carry = dense[static_cast<std::size_t>(e)] + carry * r;
        q.insertTerm(e - 1, carry);
    }
    Rational rem = dense[0] + carry * r;
    return {q, rem.isZero()};
}

}  // namespace

RationalRootsResult rationalRoots(const LaurentPolynomial& p) {
    if (p.isZero()) throw ZeroPolynomialError();

    // Strip the Laurent valuation; the root 0 it encodes is not reported.
    LaurentPolynomial q = p.shifted(-p.valuation());
    RationalRootsResult result;
    if (q.degree() == 0) return result;

    // Clear denominators to an integer polynomial.
    mpz_class lcm = 1;
    for (const auto& [e, c] : q.support()) {
        (void)e;
        mpz_class den = c.denominator();
        lcm = lcm / gcd(lcm, den) * den;
    }
    mpz_class lead = (q.leadingCoeff() * Rational(lcm)).numerator();
    mpz_class trail = (q.trailingCoeff() * Rational(lcm)).numerator();

    for (const mpz_class& num : positiveDivisors(trail)) {
        for (const mpz_class& den : positiveDivisors(lead)) {
            if (gcd(num, den) != 1) continue;
            for (int s : {1, -1}) {
                Rational cand(s < 0 ? mpz_class(-num) : num, den);
                if (q.evaluate(cand).isZero()) result.roots.insert(cand);
            }
        }
    }

    // Deflate every rational root to full multiplicity; what is left has no
    // rational roots.
    LaurentPolynomial residual = q;
    for (const Rational& r : result.roots) {
        for (;;) {
            if (residual.degree() == 0) break;
            auto [quot, exact] = divideByLinear(residual, r);
            if (!exact) break;
            residual = quot;
        }
    }
    result.residualDegree = residual.degree();
    return result;
}

}  // namespace mellin
