#ifndef MELLIN_RATIONAL_HPP
#define MELLIN_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <ostream>
#include <string>

#include "mellin/errors.hpp"

namespace mellin {

// Exact rational scalar. Always reduced, denominator > 0, zero is 0/1.
// Backed by GMP; immutable value semantics, safe to share across threads.
class Rational {
  public:
    Rational() : q_(0) {}
    Rational(long n) : q_(static_cast<long>(n)) {}  // NOLINT(google-explicit-constructor)
    Rational(long num, long den) : q_(num, den) {
        if (den == 0) throw Error("rational with zero denominator");
        q_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }
    explicit Rational(const mpz_class& z) : q_(z) {}
    Rational(const mpz_class& num, const mpz_class& den) : q_(num, den) {
        if (den == 0) throw Error("rational with zero denominator");
        q_.canonicalize();
    }

    // Parses "p", "-p" or "p/q". Throws Error on malformed input.
    static Rational parse(const std::string& text) {
        mpq_class q;
        if (q.set_str(text, 10) != 0) throw Error("malformed rational: '" + text + "'");
        q.canonicalize();
        if (q.get_den() == 0) throw Error("rational with zero denominator: '" + text + "'");
        return Rational(q);
    }

    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }
    bool isZero() const { return q_ == 0; }
    bool isInteger() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(q_ + o.q_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(q_ - o.q_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(q_ * o.q_)); }
    Rational operator/(const Rational& o) const {
        if (o.isZero()) throw Error("rational division by zero");
        return Rational(mpq_class(q_ / o.q_));
    }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }

    Rational inverse() const {
        if (isZero()) throw Error("rational division by zero");
        return Rational(mpq_class(1 / q_));
    }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    // Integer exponent; negative exponents require a nonzero base.
    Rational pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        Rational result(1), base(*this);
        while (e > 0) {
            if (e & 1) result *= base;
            base *= base;
            e >>= 1;
        }
        return result;
    }

    bool operator==(const Rational& o) const { return q_ == o.q_; }
    bool operator!=(const Rational& o) const { return q_ != o.q_; }
    bool operator<(const Rational& o) const { return q_ < o.q_; }
    bool operator<=(const Rational& o) const { return q_ <= o.q_; }
    bool operator>(const Rational& o) const { return q_ > o.q_; }
    bool operator>=(const Rational& o) const { return q_ >= o.q_; }

    // "p" for integers, "p/q" otherwise.
    std::string str() const { return q_.get_str(); }

    double toDouble() const { return q_.get_d(); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.q_;
    }

  private:
    mpq_class q_;
};

inline Rational binomial(long n, long k) {
    // Generalized binomial: n may be any integer, k >= 0.
    if (k < 0) return Rational(0);
    Rational num(1);
    for (long i = 0; i < k; ++i) num *= Rational(n - i);
    Rational den(1);
    for (long i = 2; i <= k; ++i) den *= Rational(i);
    return num / den;
}

inline Rational fallingFactorial(long n, long k) {
    Rational r(1);
    for (long i = 0; i < k; ++i) r *= Rational(n - i);
    return r;
}

}  // namespace mellin

#endif
