#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qcombin/qrat.hpp"

namespace qcombin {

/// Truncated formal power series in one variable ('z' or 't') with QRat
/// coefficients. A value of order N carries exactly the coefficients of
/// exponents 0..N; binary operations truncate to the smaller order and
/// require matching variables.
class Series {
public:
    Series(char var, int order);
    static Series constant(char var, int order, const QRat& value);
    /// value * x^exponent
    static Series monomial(char var, int order, const QRat& value, int exponent);

    char var() const { return var_; }
    int order() const { return order_; }
    const QRat& coeff(int i) const;
    void set_coeff(int i, const QRat& value);

    Series operator-() const;
    friend Series operator+(const Series& a, const Series& b);
    friend Series operator-(const Series& a, const Series& b);
    friend Series operator*(const Series& a, const Series& b);
    /// Power-series inverse against b; throws std::domain_error when b has a
    /// zero constant term.
    friend Series operator/(const Series& a, const Series& b);
    friend Series operator*(const Series& a, const QRat& c);
    friend Series operator*(const QRat& c, const Series& a) { return a * c; }
    friend bool operator==(const Series& a, const Series& b);
    friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

    /// Substitutes x -> c * x^power (power 1 or 2). The result keeps every
    /// exponent that is determined by the input: order power*N + power - 1.
    Series compose_scale(const QRat& c, int power = 1) const;
    /// Multiplies by x^k; order grows by k.
    Series shift_mul(int k) const;
    /// Termwise derivative; order drops by one.
    Series derivative() const;
    /// Restriction to a smaller (or equal) order.
    Series truncated(int new_order) const;
    /// Same coefficients under the other variable name.
    Series renamed(char new_var) const;

    std::string to_string() const;

private:
    char var_;
    int order_;
    std::vector<QRat> coeffs_;
    static void require_same(const Series& a, const Series& b);
};

/// First exponent <= through_order where the two series differ, if any.
std::optional<int> first_mismatch(const Series& a, const Series& b, int through_order);

}  // namespace qcombin
