#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qcombin/qpoly.hpp"
#include "qcombin/qrat.hpp"
#include "qcombin/series.hpp"

using namespace qcombin;

namespace {

QPoly poly(std::vector<long> coeffs) {
    std::vector<Rational> c;
    for (long v : coeffs) c.emplace_back(v);
    return QPoly(std::move(c));
}

QPoly one_minus_q_pow(int e) { return QPoly(1) - QPoly::monomial(Rational(1), e); }

std::mt19937 rng(20240817);

QPoly random_poly(int max_degree) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::vector<Rational> c(deg(rng) + 1);
    for (auto& v : c) v = Rational(coeff(rng));
    return QPoly(std::move(c));
}

QPoly random_nonzero_poly(int max_degree) {
    for (;;) {
        QPoly p = random_poly(max_degree);
        if (!p.is_zero()) return p;
    }
}

QRat random_qrat(int max_degree) {
    return QRat(random_poly(max_degree), random_nonzero_poly(max_degree));
}

}  // namespace

TEST_CASE("pochhammer rising factorial") {
    CHECK(pochhammer(make_rational(7, 3), 0) == 1);
    CHECK(pochhammer(make_rational(1, 2), 2) == make_rational(3, 4));
    CHECK(pochhammer(Rational(1), 5) == 120);  // (1)_n = n!
}

TEST_CASE("qpochhammer products") {
    CHECK(qpochhammer(1, 1, 0) == QPoly(1));
    CHECK(qpochhammer(1, 1, 2) == poly({1, -1, -1, 1}));
    CHECK(qpochhammer(1, 2, 2) == poly({1, -1, 0, -1, 1}));

    for (int n = 0; n <= 6; ++n) {
        for (int j : {1, 2}) {
            for (int s : {1, 2, 3}) {
                CHECK(qpochhammer(j, s, n).degree() == (n == 0 ? 0 : j * n + s * n * (n - 1) / 2));
            }
        }
        CHECK(qpochhammer(1, 1, n).degree() == n * (n + 1) / 2);
        if (n >= 1) CHECK(eval_at_q1(qpochhammer(1, 1, n)) == 0);
    }
    // Base exponent 0 makes the first factor vanish entirely.
    CHECK(qpochhammer(0, 2, 3).is_zero());
    CHECK_THROWS_AS(qpochhammer(-1, 1, 2), std::invalid_argument);
}

TEST_CASE("qbinomial") {
    CHECK(qbinomial(5, 0) == QPoly(1));
    CHECK(qbinomial(3, 1) == poly({1, 1, 1}));
    CHECK(qbinomial(4, 2) == poly({1, 1, 2, 1, 1}));
    CHECK_THROWS_AS(qbinomial(3, 4), std::invalid_argument);
    CHECK_THROWS_AS(qbinomial(3, -1), std::invalid_argument);

    for (int n = 0; n <= 10; ++n) {
        for (int k = 0; k <= n; ++k) {
            CHECK(qbinomial(n, k) == qbinomial(n, n - k));
            CHECK(eval_at_q1(qbinomial(n, k)) == Rational(binomial(n, k)));
        }
    }
    // Base q^2 stays a polynomial as well.
    CHECK(eval_at_q1(qbinomial(6, 3, 2)) == Rational(binomial(6, 3)));
}

TEST_CASE("qpoly division and gcd") {
    QPoly a = qpoch_q(4);
    QPoly b = qpoch_q(2);
    CHECK(QPoly::div_exact(a, b) * b == a);
    CHECK_THROWS_AS(QPoly::div_exact(poly({1, 1}), poly({0, 1})), std::domain_error);

    // Returned with integer coprime coefficients and positive leading term.
    CHECK(QPoly::gcd(one_minus_q_pow(2), one_minus_q_pow(3)) == poly({-1, 1}));
    for (int trial = 0; trial < 50; ++trial) {
        QPoly p = random_nonzero_poly(3);
        QPoly qq = random_nonzero_poly(3);
        QPoly g = QPoly::gcd(p, qq);
        CHECK(QPoly::div_exact(p, g) * g == p);
        CHECK(QPoly::div_exact(qq, g) * g == qq);
    }
}

TEST_CASE("qrat field operations") {
    QPoly q = QPoly::monomial(Rational(1), 1);
    QRat half_geom(q, one_minus_q_pow(1));  // q/(1-q)

    SUBCASE("like terms add") {
        CHECK(half_geom + half_geom == QRat(q * Rational(2), one_minus_q_pow(1)));
    }
    SUBCASE("telescoping product") {
        QRat a(QPoly(1), one_minus_q_pow(1));
        QRat b(QPoly(1), poly({1, 1}));
        CHECK(a * b == QRat(QPoly(1), one_minus_q_pow(2)));
    }
    SUBCASE("x/x = 1") {
        for (int trial = 0; trial < 30; ++trial) {
            QRat x = random_qrat(3);
            if (x.is_zero()) continue;
            CHECK(x / x == QRat(1));
        }
    }
    SUBCASE("division by zero") {
        CHECK_THROWS_AS(half_geom / QRat(), std::domain_error);
        CHECK_THROWS_AS(QRat(QPoly(1), QPoly()), std::domain_error);
    }
    SUBCASE("denominator normalization is structural") {
        // Same value assembled two ways must compare equal bitwise.
        QRat a(q * Rational(3), one_minus_q_pow(1) * Rational(3));
        CHECK(a == half_geom);
        CHECK(a.den().coeff(0) == 1);
    }
}

TEST_CASE("qrat cross-multiplication equality matches structural equality") {
    for (int trial = 0; trial < 200; ++trial) {
        QRat a = random_qrat(3);
        QRat b = random_qrat(3);
        CHECK(QRat::equal_cross(a, b) == (a == b));
        CHECK(QRat::equal_cross(a, a) == true);
    }
}

TEST_CASE("qrat field axioms on random values") {
    for (int trial = 0; trial < 40; ++trial) {
        QRat a = random_qrat(2), b = random_qrat(2), c = random_qrat(2);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == QRat());
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
}

TEST_CASE("eval at q=1") {
    CHECK(eval_at_q1(poly({0, 1, 1})) == 2);  // the degree-3 alternating count
    CHECK(eval_at_q1(QRat(1)) == 1);
    CHECK(eval_at_q1(QRat(poly({0, 1, 1}), poly({1, 1}))) == 1);
    CHECK_THROWS_WITH_AS(eval_at_q1(QRat(QPoly(1), one_minus_q_pow(1))), "pole at q=1",
                         std::domain_error);
}

TEST_CASE("qrat q -> 1/q substitution") {
    // q/(1-q) becomes (1/q)/(1-1/q) = -1/(1-q) after clearing powers.
    QRat x(QPoly::monomial(Rational(1), 1), one_minus_q_pow(1));
    QRat y = x.subst_q_inverse();
    CHECK(y == QRat(QPoly(-1), one_minus_q_pow(1)));
    // Involution on a random sample.
    for (int trial = 0; trial < 40; ++trial) {
        QRat r = random_qrat(3);
        CHECK(r.subst_q_inverse().subst_q_inverse() == r);
    }
}

TEST_CASE("series arithmetic") {
    Series one_plus = Series::constant('z', 2, QRat(1)) + Series::monomial('z', 2, QRat(1), 1);
    Series one_minus = Series::constant('z', 2, QRat(1)) - Series::monomial('z', 2, QRat(1), 1);
    Series prod = one_plus * one_minus;
    CHECK(prod.coeff(0) == QRat(1));
    CHECK(prod.coeff(1).is_zero());
    CHECK(prod.coeff(2) == QRat(-1));

    Series geom = Series::constant('z', 3, QRat(1)) /
                  (Series::constant('z', 3, QRat(1)) - Series::monomial('z', 3, QRat(1), 1));
    for (int i = 0; i <= 3; ++i) CHECK(geom.coeff(i) == QRat(1));
}

TEST_CASE("series compose_scale") {
    // cos truncation by hand: 1 - z^2/2 + z^4/24.
    Series cos('z', 4);
    cos.set_coeff(0, QRat(1));
    cos.set_coeff(2, QRat(make_rational(-1, 2)));
    cos.set_coeff(4, QRat(make_rational(1, 24)));
    Series doubled = cos.compose_scale(QRat(2), 1);
    CHECK(doubled.coeff(2) == QRat(-2));
    Series squared = cos.compose_scale(QRat(-1), 2);
    CHECK(squared.order() == 9);
    CHECK(squared.coeff(4) == QRat(make_rational(-1, 2)));
}

TEST_CASE("series division round-trips") {
    std::uniform_int_distribution<int> coeff(-2, 2);
    for (int trial = 0; trial < 25; ++trial) {
        Series a('z', 5), b('z', 5);
        for (int i = 0; i <= 5; ++i) {
            a.set_coeff(i, QRat(Rational(coeff(rng))));
            b.set_coeff(i, QRat(Rational(coeff(rng))));
        }
        if (b.coeff(0).is_zero()) b.set_coeff(0, QRat(1));
        CHECK((a / b) * b == a);
    }
}

TEST_CASE("series errors") {
    Series z('z', 3), t('t', 3);
    CHECK_THROWS_AS(z + t, std::domain_error);
    Series no_constant = Series::monomial('z', 3, QRat(1), 1);
    CHECK_THROWS_AS(z / no_constant, std::domain_error);
    CHECK_THROWS_AS(Series('x', 3), std::invalid_argument);
}

TEST_CASE("qpoly rendering") {
    CHECK(poly({0, 1, 1}).to_string() == "q + q^2");
    CHECK(poly({1, 0, -2}).to_string() == "1 - 2*q^2");
    CHECK(QPoly().to_string() == "0");
    CHECK(QPoly(make_rational(1, 2)).to_string() == "1/2");
    CHECK(QRat(QPoly::monomial(Rational(1), 1), one_minus_q_pow(1)).to_string() == "q/(1 - q)");
}
