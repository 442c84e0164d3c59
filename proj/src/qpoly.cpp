#include "qcombin/qpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qcombin {

namespace {

const Rational kZero(0);

// Integer polynomial helpers for the fraction-free GCD. Coefficient vectors
// follow the same no-trailing-zero convention as QPoly.

using ZPoly = std::vector<Integer>;

void ztrim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Integer zcontent(const ZPoly& p) {
    Integer g(0);
    for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

void zdiv_scalar(ZPoly& p, const Integer& d) {
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
}

// Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b.
ZPoly zprem(ZPoly a, const ZPoly& b) {
    const int db = static_cast<int>(b.size()) - 1;
    const Integer& lb = b.back();
    int scalings_left = static_cast<int>(a.size()) - 1 - db + 1;
    while (!a.empty() && static_cast<int>(a.size()) - 1 >= db) {
        Integer top = a.back();
        for (auto& c : a) c *= lb;
        const int da = static_cast<int>(a.size()) - 1;
        for (int i = 0; i <= db; ++i) a[da - db + i] -= top * b[i];
        ztrim(a);
        --scalings_left;
    }
    // A degree drop of more than one skips scalings; pad so the result is
    // exactly lc(b)^(delta+1) * a mod b as the subresultant divisors require.
    for (; scalings_left > 0; --scalings_left)
        for (auto& c : a) c *= lb;
    return a;
}

// Clears denominators and the content; sign of the leading coefficient kept positive.
ZPoly primitive_part(const QPoly& p) {
    Integer lcm(1);
    for (const auto& c : p.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
    ZPoly z;
    z.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) z.push_back(Integer(c.get_num() * (lcm / c.get_den())));
    Integer cont = zcontent(z);
    if (cont != 0) zdiv_scalar(z, cont);
    if (!z.empty() && z.back() < 0)
        for (auto& c : z) c = -c;
    return z;
}

QPoly from_zpoly(const ZPoly& z) {
    std::vector<Rational> c;
    c.reserve(z.size());
    for (const auto& v : z) c.emplace_back(v);
    return QPoly(std::move(c));
}

}  // namespace

QPoly::QPoly(const Rational& constant) {
    if (constant != 0) coeffs_.push_back(constant);
}

QPoly::QPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPoly QPoly::monomial(const Rational& coeff, int exponent) {
    if (coeff == 0) return QPoly();
    std::vector<Rational> c(exponent + 1, kZero);
    c[exponent] = coeff;
    return QPoly(std::move(c));
}

void QPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rational& QPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[i];
}

Rational QPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (int i = degree(); i >= 0; --i) acc = acc * x + coeffs_[i];
    return acc;
}

Rational QPoly::eval_at_one() const {
    Rational acc(0);
    for (const auto& c : coeffs_) acc += c;
    return acc;
}

QPoly QPoly::reverse_shift(int m) const {
    if (m < degree()) throw std::invalid_argument("QPoly::reverse_shift: shift below degree");
    std::vector<Rational> c(m + 1, kZero);
    for (int i = 0; i <= degree(); ++i) c[m - i] = coeffs_[i];
    return QPoly(std::move(c));
}

QPoly QPoly::operator-() const {
    QPoly r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

QPoly& QPoly::operator+=(const QPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), kZero);
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), kZero);
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return QPoly();
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return QPoly(std::move(c));
}

QPoly& QPoly::operator*=(const QPoly& o) {
    *this = *this * o;
    return *this;
}

QPoly& QPoly::operator*=(const Rational& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& v : coeffs_) v *= c;
    return *this;
}

std::pair<QPoly, QPoly> QPoly::div_mod(const QPoly& a, const QPoly& b) {
    if (b.is_zero()) throw std::domain_error("QPoly: division by zero polynomial");
    QPoly rem(a);
    const int db = b.degree();
    if (rem.degree() < db) return {QPoly(), rem};
    std::vector<Rational> quot(rem.degree() - db + 1, kZero);
    const Rational& lb = b.coeffs_.back();
    while (rem.degree() >= db) {
        int shift = rem.degree() - db;
        Rational factor = rem.coeffs_.back() / lb;
        quot[shift] = factor;
        for (int i = 0; i <= db; ++i) rem.coeffs_[shift + i] -= factor * b.coeffs_[i];
        rem.trim();
        if (rem.is_zero()) break;
    }
    return {QPoly(std::move(quot)), rem};
}

QPoly QPoly::div_exact(const QPoly& a, const QPoly& b) {
    auto [q, r] = div_mod(a, b);
    if (!r.is_zero()) throw std::domain_error("QPoly::div_exact: division is not exact");
    return q;
}

QPoly QPoly::gcd(const QPoly& a, const QPoly& b) {
    if (a.is_zero() && b.is_zero()) return QPoly();
    if (a.is_zero()) return from_zpoly(primitive_part(b));
    if (b.is_zero()) return from_zpoly(primitive_part(a));

    ZPoly A = primitive_part(a);
    ZPoly B = primitive_part(b);
    if (A.size() < B.size()) std::swap(A, B);

    // Subresultant PRS (Brown/Collins): divisors g*h^delta keep the
    // remainders fraction-free without content recomputation each round.
    Integer g(1), h(1);
    while (true) {
        int delta = static_cast<int>(A.size()) - static_cast<int>(B.size());
        ZPoly R = zprem(A, B);
        if (R.empty()) break;
        if (R.size() == 1) return QPoly(1);
        A = std::move(B);
        Integer div = g;
        for (int i = 0; i < delta; ++i) div *= h;
        zdiv_scalar(R, div);
        B = std::move(R);
        g = A.back();
        if (delta > 0) {
            Integer gd(1);
            for (int i = 0; i < delta; ++i) gd *= g;
            Integer hd(1);
            for (int i = 0; i + 1 < delta; ++i) hd *= h;
            Integer hn;
            mpz_divexact(hn.get_mpz_t(), gd.get_mpz_t(), hd.get_mpz_t());
            h = hn;
        }
    }
    Integer cont = zcontent(B);
    if (cont != 0) zdiv_scalar(B, cont);
    if (!B.empty() && B.back() < 0)
        for (auto& c : B) c = -c;
    return from_zpoly(B);
}

std::string QPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = 0; i <= degree(); ++i) {
        const Rational& c = coeffs_[i];
        if (c == 0) continue;
        const bool negative = c < 0;
        Rational mag = negative ? Rational(-c) : c;
        if (first) {
            if (negative) out << "-";
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        if (i == 0) {
            out << mag.get_str();
        } else {
            if (mag != 1) out << mag.get_str() << "*";
            out << var;
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

QPoly qpochhammer(int base_exponent, int step, int n) {
    if (base_exponent < 0) throw std::invalid_argument("qpochhammer: negative base exponent");
    if (step <= 0) throw std::invalid_argument("qpochhammer: step must be positive");
    if (n < 0) throw std::invalid_argument("qpochhammer: negative length");
    QPoly acc(1);
    for (int i = 0; i < n; ++i) {
        QPoly factor = QPoly(1) - QPoly::monomial(Rational(1), base_exponent + i * step);
        acc *= factor;
    }
    return acc;
}

QPoly qbinomial(int n, int k, int step) {
    if (n < 0 || k < 0 || k > n) throw std::invalid_argument("qbinomial: require 0 <= k <= n");
    QPoly num = qpochhammer(step, step, n);
    QPoly den = qpochhammer(step, step, k) * qpochhammer(step, step, n - k);
    return QPoly::div_exact(num, den);
}

}  // namespace qcombin
