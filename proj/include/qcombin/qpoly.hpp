#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qcombin/rational.hpp"

namespace qcombin {

/// Dense univariate polynomial in q with exact rational coefficients.
///
/// Invariant: the coefficient vector carries no trailing zeros, so the zero
/// polynomial is the empty vector and degree() is -1 for it. All operations
/// return values in this canonical form, which makes operator== structural.
class QPoly {
public:
    QPoly() = default;
    QPoly(long constant) : QPoly(Rational(constant)) {}
    QPoly(const Rational& constant);
    explicit QPoly(std::vector<Rational> coeffs);

    /// c * q^exponent
    static QPoly monomial(const Rational& coeff, int exponent);

    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    /// Coefficient of q^i (zero outside the stored range).
    const Rational& coeff(int i) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Rational eval(const Rational& x) const;
    /// Sum of coefficients.
    Rational eval_at_one() const;

    /// q^m * p(1/q); requires m >= degree().
    QPoly reverse_shift(int m) const;

    QPoly operator-() const;
    QPoly& operator+=(const QPoly& o);
    QPoly& operator-=(const QPoly& o);
    QPoly& operator*=(const QPoly& o);
    QPoly& operator*=(const Rational& c);

    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    friend QPoly operator*(QPoly a, const Rational& c) { return a *= c; }
    friend QPoly operator*(const Rational& c, QPoly a) { return a *= c; }
    friend bool operator==(const QPoly& a, const QPoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }

    /// Quotient and remainder of a by b (b nonzero).
    static std::pair<QPoly, QPoly> div_mod(const QPoly& a, const QPoly& b);
    /// Exact quotient; throws std::domain_error when b does not divide a.
    static QPoly div_exact(const QPoly& a, const QPoly& b);
    /// GCD, returned with integer coprime coefficients and positive leading
    /// coefficient. Computed by a fraction-free subresultant remainder
    /// sequence to keep intermediate coefficients bounded.
    static QPoly gcd(const QPoly& a, const QPoly& b);

    /// Ascending-exponent rendering, e.g. "q + q^2", "1 - 2*q^3".
    std::string to_string(const std::string& var = "q") const;

private:
    std::vector<Rational> coeffs_;
    void trim();
};

/// q-Pochhammer (q^j; q^s)_n = prod_{i=0}^{n-1} (1 - q^{j+is}); requires j >= 0.
QPoly qpochhammer(int base_exponent, int step, int n);

/// (q;q)_n.
inline QPoly qpoch_q(int n) { return qpochhammer(1, 1, n); }

/// Gaussian binomial in base q^s: (q^s;q^s)_n / ((q^s;q^s)_k (q^s;q^s)_{n-k}).
/// Throws unless 0 <= k <= n.
QPoly qbinomial(int n, int k, int step = 1);

/// Exact value at q = 1 (sum of coefficients).
inline Rational eval_at_q1(const QPoly& p) { return p.eval_at_one(); }

}  // namespace qcombin
