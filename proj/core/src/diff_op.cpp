#include "mellin/diff_op.hpp"

#include <mutex>
#include <sstream>
#include <vector>

#include "mellin/errors.hpp"

namespace mellin {

namespace {

std::mutex g_tableMutex;

// Row n holds S(n, 0..n).
std::vector<std::vector<Rational>>& stirling2Table() {
    static std::vector<std::vector<Rational>> table{{Rational(1)}};
    return table;
}

// Row n holds the T^k-coefficients of T(T-1)...(T-n+1).
std::vector<std::vector<Rational>>& fallingFactorialTable() {
    static std::vector<std::vector<Rational>> table{{Rational(1)}};
    return table;
}

}  // namespace

Rational stirling2(int n, int k) {
    if (n < 0 || k < 0 || k > n) return Rational(0);
    std::lock_guard<std::mutex> lock(g_tableMutex);
    auto& table = stirling2Table();
    while (static_cast<int>(table.size()) <= n) {
        const int m = static_cast<int>(table.size());
        std::vector<Rational> row(static_cast<std::size_t>(m) + 1, Rational(0));
        for (int j = 1; j <= m; ++j) {
            // S(m, j) = j*S(m-1, j) + S(m-1, j-1)
            Rational v = table[m - 1][j - 1];
            if (j < m) v += Rational(j) * table[m - 1][j];
            row[static_cast<std::size_t>(j)] = v;
        }
        table.push_back(std::move(row));
    }
    return table[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

Rational fallingFactorialCoeff(int n, int k) {
    if (n < 0 || k < 0 || k > n) return Rational(0);
    std::lock_guard<std::mutex> lock(g_tableMutex);
    auto& table = fallingFactorialTable();
    while (static_cast<int>(table.size()) <= n) {
        const int m = static_cast<int>(table.size());
        // row_m = row_{m-1} * (T - (m-1))
        const auto& prev = table[m - 1];
        std::vector<Rational> row(static_cast<std::size_t>(m) + 1, Rational(0));
        for (int j = 0; j < m; ++j) {
            row[static_cast<std::size_t>(j) + 1] += prev[static_cast<std::size_t>(j)];
            row[static_cast<std::size_t>(j)] -= Rational(m - 1) * prev[static_cast<std::size_t>(j)];
        }
        table.push_back(std::move(row));
    }
    return table[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

int DiffOp::opDegree() const {
    if (terms_.empty()) throw ZeroOperatorError();
    int d = 0;
    for (const auto& [key, c] : terms_) {
        (void)c;
        d = std::max(d, key.second);
    }
    return d;
}

LaurentPolynomial DiffOp::opCoefficient(int j) const {
    LaurentPolynomial p;
    for (const auto& [key, c] : terms_)
        if (key.second == j) p.insertTerm(key.first, c);
    return p;
}

int DiffOp::minZExp() const {
    if (terms_.empty()) throw ZeroOperatorError();
    int r = terms_.begin()->first.first;
    for (const auto& [key, c] : terms_) {
        (void)c;
        r = std::min(r, key.first);
    }
    return r;
}

int DiffOp::maxZExp() const {
    if (terms_.empty()) throw ZeroOperatorError();
    int r = terms_.begin()->first.first;
    for (const auto& [key, c] : terms_) {
        (void)c;
        r = std::max(r, key.first);
    }
    return r;
}

DiffOp DiffOp::operator-() const {
    DiffOp r(pres_);
    for (const auto& [key, c] : terms_) r.terms_[key] = -c;
    return r;
}

DiffOp DiffOp::operator+(const DiffOp& o) const {
    DiffOp rhs = (o.pres_ == pres_) ? o : convertPresentation(o, pres_);
    DiffOp r = *this;
    for (const auto& [key, c] : rhs.terms_) r.insertTerm(key.first, key.second, c);
    return r;
}

DiffOp DiffOp::operator-(const DiffOp& o) const { return *this + (-o); }

DiffOp DiffOp::scaled(const Rational& c) const {
    DiffOp r(pres_);
    if (c.isZero()) return r;
    for (const auto& [key, v] : terms_) r.terms_[key] = v * c;
    return r;
}

DiffOp DiffOp::leftMulZPower(int k) const {
    DiffOp r(pres_);
    for (const auto& [key, v] : terms_) r.terms_[{key.first + k, key.second}] = v;
    return r;
}

std::string DiffOp::str() const {
    if (terms_.empty()) return "0";
    const std::string opName = pres_ == Presentation::Theta ? "T" : "d";
    std::ostringstream os;
    bool first = true;
    // Highest operator power first, z-polynomial coefficients grouped.
    for (int j = opDegree(); j >= 0; --j) {
        LaurentPolynomial p = opCoefficient(j);
        if (p.isZero()) continue;
        bool negated = false;
        if (!first && p.leadingCoeff().sign() < 0) {
            negated = true;
            p = -p;
        }
        os << (first ? "" : (negated ? " - " : " + "));
        first = false;
        if (j == 0) {
            os << (p.isMonomial() || p.isConstant() ? p.str("z")
                                                    : "(" + p.str("z") + ")");
            continue;
        }
        if (p == LaurentPolynomial(Rational(1))) {
            // coefficient 1: just the operator power
        } else if (p.isMonomial()) {
            os << p.str("z") << "*";
        } else {
            os << "(" << p.str("z") << ")*";
        }
        os << opName;
        if (j != 1) os << "^" << j;
    }
    return os.str();
}

DiffOp mulDiffOp(const DiffOp& P, const DiffOp& Q) {
    const Presentation pres = P.presentation();
    const DiffOp& rhs = (Q.presentation() == pres) ? Q : convertPresentation(Q, pres);
    DiffOp out(pres);
    for (const auto& [kp, cp] : P.terms()) {
        const auto [r, j] = kp;
        for (const auto& [kq, cq] : rhs.terms()) {
            const auto [rho, kappa] = kq;
            const Rational c = cp * cq;
            if (pres == Presentation::Theta) {
                // z^r T^j z^rho T^kappa = z^(r+rho) (T+rho)^j T^kappa
                for (int b = 0; b <= j; ++b)
                    out.insertTerm(r + rho, b + kappa,
                                   c * binomial(j, b) * Rational(rho).pow(j - b));
            } else {
                // z^r d^j z^rho d^kappa =
                //   z^(r+rho) sum_b C(j,b) rho_(b) z^(-b) d^(j-b+kappa)
                for (int b = 0; b <= j; ++b) {
                    const Rational w = binomial(j, b) * fallingFactorial(rho, b);
                    if (w.isZero()) continue;
                    out.insertTerm(r + rho - b, j - b + kappa, c * w);
                }
            }
        }
    }
    return out;
}

DiffOp convertPresentation(const DiffOp& P, Presentation target) {
    if (P.presentation() == target) return P;
    DiffOp out(target);
    if (target == Presentation::D) {
        // z^r T^j = z^r sum_i S(j,i) z^i d^i
        for (const auto& [key, c] : P.terms()) {
            const auto [r, j] = key;
            if (j == 0) {
                out.insertTerm(r, 0, c);
                continue;
            }
            for (int i = 1; i <= j; ++i) {
                const Rational s = stirling2(j, i);
                if (!s.isZero()) out.insertTerm(r + i, i, c * s);
            }
        }
    } else {
        // z^r d^i = z^(r-i) T(T-1)...(T-i+1)
        for (const auto& [key, c] : P.terms()) {
            const auto [r, i] = key;
            for (int k = 0; k <= i; ++k) {
                const Rational s = fallingFactorialCoeff(i, k);
                if (!s.isZero()) out.insertTerm(r - i, k, c * s);
            }
        }
    }
    return out;
}

DiffOp powDiffOp(const DiffOp& P, unsigned e) {
    DiffOp result = DiffOp::constant(Rational(1), P.presentation());
    DiffOp base = P;
    while (e > 0) {
        if (e & 1u) result = mulDiffOp(result, base);
        base = mulDiffOp(base, base);
        e >>= 1u;
    }
    return result;
}

}  // namespace mellin
