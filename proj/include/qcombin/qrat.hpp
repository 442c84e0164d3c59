#pragma once

#include <string>

#include "qcombin/qpoly.hpp"

namespace qcombin {

/// Rational function in q, kept in a canonical form so that operator== is
/// structural: gcd(num, den) = 1 and the lowest nonzero coefficient of the
/// denominator is 1. Zero is 0/1.
class QRat {
public:
    QRat() : num_(), den_(1) {}
    QRat(long constant) : num_(constant), den_(1) {}
    QRat(const Rational& constant) : num_(constant), den_(1) {}
    QRat(const QPoly& p) : num_(p), den_(1) {}
    /// num/den; throws std::domain_error when den is the zero polynomial.
    QRat(QPoly num, QPoly den);

    /// q^e for any integer e (negative exponents land in the denominator).
    static QRat q_power(int e);

    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_ == QPoly(1); }
    /// Throws std::domain_error when the reduced denominator is not 1.
    const QPoly& as_polynomial() const;

    QRat operator-() const;
    friend QRat operator+(const QRat& a, const QRat& b);
    friend QRat operator-(const QRat& a, const QRat& b);
    friend QRat operator*(const QRat& a, const QRat& b);
    /// Throws std::domain_error on division by zero.
    friend QRat operator/(const QRat& a, const QRat& b);
    QRat& operator+=(const QRat& o) { return *this = *this + o; }
    QRat& operator-=(const QRat& o) { return *this = *this - o; }
    QRat& operator*=(const QRat& o) { return *this = *this * o; }
    QRat& operator/=(const QRat& o) { return *this = *this / o; }

    friend bool operator==(const QRat& a, const QRat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const QRat& a, const QRat& b) { return !(a == b); }

    /// Cross-multiplied comparison; avoids reducing large operands twice.
    static bool equal_cross(const QRat& a, const QRat& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }

    /// Exact value at q = 1; throws std::domain_error("pole at q=1") when the
    /// reduced denominator vanishes there.
    Rational eval_at_one() const;

    /// The substitution q -> 1/q, realized by reversing numerator and
    /// denominator coefficients against a common degree shift.
    QRat subst_q_inverse() const;

    std::string to_string(const std::string& var = "q") const;

private:
    QPoly num_, den_;
    void reduce();
    void normalize_den();
};

inline Rational eval_at_q1(const QRat& r) { return r.eval_at_one(); }

}  // namespace qcombin
