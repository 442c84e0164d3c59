#include "qcombin/qrat.hpp"

#include <stdexcept>
#include <utility>

namespace qcombin {

QRat::QRat(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("QRat: zero denominator");
    reduce();
}

void QRat::reduce() {
    if (num_.is_zero()) {
        den_ = QPoly(1);
        return;
    }
    QPoly g = QPoly::gcd(num_, den_);
    if (g.degree() > 0 || g.coeff(0) != 1) {
        num_ = QPoly::div_exact(num_, g);
        den_ = QPoly::div_exact(den_, g);
    }
    normalize_den();
}

void QRat::normalize_den() {
    int lowest = 0;
    while (den_.coeff(lowest) == 0) ++lowest;
    const Rational lead = den_.coeff(lowest);
    if (lead != 1) {
        Rational inv = 1 / lead;
        num_ *= inv;
        den_ *= inv;
    }
}

QRat QRat::q_power(int e) {
    QRat r;
    if (e >= 0) {
        r.num_ = QPoly::monomial(Rational(1), e);
        r.den_ = QPoly(1);
    } else {
        r.num_ = QPoly(1);
        r.den_ = QPoly::monomial(Rational(1), -e);
    }
    return r;
}

const QPoly& QRat::as_polynomial() const {
    if (!is_polynomial()) throw std::domain_error("QRat: not a polynomial: " + to_string());
    return num_;
}

QRat QRat::operator-() const {
    QRat r(*this);
    r.num_ = -r.num_;
    return r;
}

QRat operator+(const QRat& a, const QRat& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    // Knuth's scheme: with g = gcd(da, db), only t = na*(db/g) + nb*(da/g)
    // can share a factor with g, never with the cofactors.
    QPoly g = QPoly::gcd(a.den_, b.den_);
    QPoly da_red = QPoly::div_exact(a.den_, g);
    QPoly db_red = QPoly::div_exact(b.den_, g);
    QPoly t = a.num_ * db_red + b.num_ * da_red;
    if (t.is_zero()) return QRat();
    QPoly g2 = QPoly::gcd(t, g);
    QRat r;
    r.num_ = QPoly::div_exact(t, g2);
    r.den_ = da_red * db_red * QPoly::div_exact(g, g2);
    r.normalize_den();
    return r;
}

QRat operator-(const QRat& a, const QRat& b) { return a + (-b); }

QRat operator*(const QRat& a, const QRat& b) {
    if (a.is_zero() || b.is_zero()) return QRat();
    QPoly g1 = QPoly::gcd(a.num_, b.den_);
    QPoly g2 = QPoly::gcd(b.num_, a.den_);
    QRat r;
    r.num_ = QPoly::div_exact(a.num_, g1) * QPoly::div_exact(b.num_, g2);
    r.den_ = QPoly::div_exact(a.den_, g2) * QPoly::div_exact(b.den_, g1);
    r.normalize_den();
    return r;
}

QRat operator/(const QRat& a, const QRat& b) {
    if (b.is_zero()) throw std::domain_error("QRat: division by zero");
    if (a.is_zero()) return QRat();
    QPoly g1 = QPoly::gcd(a.num_, b.num_);
    QPoly g2 = QPoly::gcd(b.den_, a.den_);
    QRat r;
    r.num_ = QPoly::div_exact(a.num_, g1) * QPoly::div_exact(b.den_, g2);
    r.den_ = QPoly::div_exact(a.den_, g2) * QPoly::div_exact(b.num_, g1);
    r.normalize_den();
    return r;
}

Rational QRat::eval_at_one() const {
    Rational d = den_.eval_at_one();
    if (d == 0) throw std::domain_error("pole at q=1");
    return num_.eval_at_one() / d;
}

QRat QRat::subst_q_inverse() const {
    if (is_zero()) return QRat();
    const int dn = num_.degree();
    const int dd = den_.degree();
    const int m = dn > dd ? dn : dd;
    return QRat(num_.reverse_shift(m), den_.reverse_shift(m));
}

namespace {

int term_count(const QPoly& p) {
    int count = 0;
    for (int i = 0; i <= p.degree(); ++i)
        if (p.coeff(i) != 0) ++count;
    return count;
}

}  // namespace

std::string QRat::to_string(const std::string& var) const {
    if (is_polynomial()) return num_.to_string(var);
    std::string n = num_.to_string(var);
    std::string d = den_.to_string(var);
    if (term_count(num_) > 1) n = "(" + n + ")";
    // A lone monomial denominator still needs parens unless it is a pure
    // power of q: "1/2*q" would read as (1/2)q.
    if (term_count(den_) > 1 || (den_.degree() > 0 && den_.coeff(den_.degree()) != 1))
        d = "(" + d + ")";
    return n + "/" + d;
}

}  // namespace qcombin
