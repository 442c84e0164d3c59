#include "qcombin/qfun.hpp"

#include <sstream>
#include <stdexcept>

#include "qcombin/permstats.hpp"

namespace qcombin::qfun {

namespace {

QRat one_minus_q_pow(int e) { return QRat(QPoly(1) - QPoly::monomial(Rational(1), e)); }

QRat q_pow(int e) { return QRat::q_power(e); }

std::string coeff_mismatch(const std::string& what, char var, int exponent, const QRat& lhs,
                           const QRat& rhs) {
    std::ostringstream out;
    out << what << ": coefficient of " << var << "^" << exponent << ": " << lhs.to_string()
        << " != " << rhs.to_string();
    return out.str();
}

CheckWitness compare_series(const std::string& what, const Series& lhs, const Series& rhs,
                            int through_order) {
    if (auto bad = first_mismatch(lhs, rhs, through_order))
        return {false, coeff_mismatch(what, lhs.var(), *bad, lhs.coeff(*bad), rhs.coeff(*bad))};
    return {};
}

}  // namespace

Series CfTerm::to_series(char var, int order) const {
    Series s(var, order);
    for (const auto& [c, power] : monomials)
        if (power <= order) s.set_coeff(power, s.coeff(power) + c);
    return s;
}

Series cf_convergent(const ContinuedFraction& cf, int depth, int order) {
    if (depth < 0 || depth > cf.depth())
        throw std::invalid_argument("cf_convergent: depth exceeds available partials");
    Series tail = cf.numerators[depth].to_series(cf.var, order) /
                  cf.denominators[depth].to_series(cf.var, order);
    for (int i = depth - 1; i >= 0; --i) {
        Series level = cf.denominators[i].to_series(cf.var, order);
        level = cf.style == ContinuedFraction::Style::Minus ? level - tail : level + tail;
        tail = cf.numerators[i].to_series(cf.var, order) / level;
    }
    return tail;
}

ContinuedFraction stieltjes_from_weights(const std::function<QRat(int)>& weight, int depth,
                                         StieltjesForm form) {
    std::vector<QRat> w(depth + 1);
    for (int h = 0; h <= depth; ++h) {
        w[h] = weight(h);
        if (w[h].is_zero()) throw std::domain_error("stieltjes_from_weights: zero weight");
    }
    ContinuedFraction cf;
    cf.style = ContinuedFraction::Style::Minus;
    if (form == StieltjesForm::Products) {
        cf.numerators.push_back(CfTerm::constant(w[0]));
        cf.denominators.push_back(CfTerm::constant(QRat(1)));
        for (int i = 1; i <= depth; ++i) {
            cf.numerators.push_back(CfTerm::monomial(w[i - 1] * w[i], 2));
            cf.denominators.push_back(CfTerm::constant(QRat(1)));
        }
    } else {
        cf.numerators.push_back(CfTerm::constant(QRat(1)));
        cf.denominators.push_back(CfTerm::constant(QRat(1) / w[0]));
        for (int i = 1; i <= depth; ++i) {
            cf.numerators.push_back(CfTerm::monomial(QRat(1), 2));
            cf.denominators.push_back(CfTerm::constant(QRat(1) / w[i]));
        }
    }
    return cf;
}

ContinuedFraction lambert_tan_cf(int depth) {
    ContinuedFraction cf;
    cf.style = ContinuedFraction::Style::Minus;
    cf.numerators.push_back(CfTerm::monomial(QRat(1), 1));
    cf.denominators.push_back(CfTerm::constant(QRat(1)));
    for (int i = 1; i <= depth; ++i) {
        cf.numerators.push_back(CfTerm::monomial(QRat(1), 2));
        cf.denominators.push_back(CfTerm::constant(QRat(Rational(2 * i + 1))));
    }
    return cf;
}

ContinuedFraction tan_q_cf(int depth) {
    ContinuedFraction cf;
    cf.style = ContinuedFraction::Style::Minus;
    cf.numerators.push_back(CfTerm::monomial(QRat(1), 1));
    cf.denominators.push_back(CfTerm::constant(one_minus_q_pow(1)));
    for (int i = 1; i <= depth; ++i) {
        cf.numerators.push_back(CfTerm::monomial(QRat(1), 2));
        cf.denominators.push_back(CfTerm::constant(one_minus_q_pow(2 * i + 1) / q_pow(i)));
    }
    return cf;
}

ContinuedFraction hyp0f1_ratio_cf(const Rational& a, int depth) {
    ContinuedFraction cf;
    cf.style = ContinuedFraction::Style::Plus;
    cf.numerators.push_back(CfTerm::constant(QRat(1)));
    cf.denominators.push_back(CfTerm::constant(QRat(1)));
    for (int i = 1; i <= depth; ++i) {
        Rational k = 1 / ((a + i - 1) * (a + i));
        cf.numerators.push_back(CfTerm::monomial(QRat(k), 1));
        cf.denominators.push_back(CfTerm::constant(QRat(1)));
    }
    return cf;
}

ContinuedFraction hyp0phi1_ratio_cf(int a_exponent, int depth) {
    ContinuedFraction cf;
    cf.style = ContinuedFraction::Style::Plus;
    cf.numerators.push_back(CfTerm::constant(QRat(1)));
    cf.denominators.push_back(CfTerm::constant(QRat(1)));
    for (int i = 1; i <= depth; ++i) {
        QRat k = q_pow(i - 1) / (one_minus_q_pow(a_exponent + i - 1) * one_minus_q_pow(a_exponent + i));
        cf.numerators.push_back(CfTerm::monomial(k, 1));
        cf.denominators.push_back(CfTerm::constant(QRat(1)));
    }
    return cf;
}

Series hyp0f1(const Rational& a, int order, char var) {
    if (a.get_den() == 1 && a <= 0)
        throw std::invalid_argument("hyp0f1: parameter must not be a nonpositive integer");
    Series s(var, order);
    Rational coeff(1);
    for (int n = 0; n <= order; ++n) {
        if (n > 0) coeff /= Rational(n) * (a + n - 1);
        s.set_coeff(n, QRat(coeff));
    }
    return s;
}

Series hyp0phi1(const HypParams& params, int order, char var) {
    if (params.param_exponent < 1) throw std::invalid_argument("hyp0phi1: parameter exponent must be >= 1");
    if (params.base_step < 1) throw std::invalid_argument("hyp0phi1: base step must be >= 1");
    const int j = params.param_exponent;
    const int s = params.base_step;
    Series out(var, order);
    for (int n = 0; n <= order; ++n) {
        QPoly den = qpochhammer(j, s, n) * qpochhammer(s, s, n);
        out.set_coeff(n, QRat(QPoly::monomial(Rational(1), s * n * (n - 1)), den));
    }
    return out;
}

Series q_trig(TrigKind kind, int order) {
    auto alternating = [order](bool odd, bool star) {
        Series s('z', order);
        for (int m = odd ? 1 : 0; m <= order; m += 2) {
            const int i = m / 2;
            Rational sign = i % 2 == 0 ? 1 : -1;
            QPoly num = star ? QPoly::monomial(sign, m * (m - 1) / 2) : QPoly(sign);
            s.set_coeff(m, QRat(num, qpoch_q(m)));
        }
        return s;
    };
    switch (kind) {
        case TrigKind::Sin: return alternating(true, false);
        case TrigKind::Cos: return alternating(false, false);
        case TrigKind::SinStar: return alternating(true, true);
        case TrigKind::CosStar: return alternating(false, true);
        case TrigKind::Tan: return alternating(true, false) / alternating(false, false);
        case TrigKind::Sec: return Series::constant('z', order, QRat(1)) / alternating(false, false);
        case TrigKind::TanStar: return alternating(true, true) / alternating(false, true);
        case TrigKind::SecStar: return Series::constant('z', order, QRat(1)) / alternating(false, true);
    }
    throw std::invalid_argument("q_trig: unknown kind");
}

Series shifted_dyck_ratio(int h, int order) {
    if (h < 0) throw std::invalid_argument("shifted_dyck_ratio: h must be nonnegative");
    const int inner = order / 2;
    QRat minus_q_num = -q_pow(2 * h + 3);
    QRat minus_q_den = -q_pow(2 * h + 1);
    Series num = hyp0phi1({2 * h + 3, 2}, inner).compose_scale(minus_q_num, 2).truncated(order);
    Series den = hyp0phi1({2 * h + 1, 2}, inner).compose_scale(minus_q_den, 2).truncated(order);
    return (num / den) * (q_pow(h) / one_minus_q_pow(2 * h + 1));
}

Series sec_star_ascent_series(int order) {
    std::vector<Series> shifted;
    for (int j = 0; 2 * (j + 1) <= order; ++j) shifted.push_back(shifted_dyck_ratio(j, order));
    Series v('z', order);
    for (int i = 1; 2 * i <= order; ++i) {
        Series prod = Series::constant('z', order - 2 * i, QRat(1));
        for (int j = 0; j < i; ++j) prod = prod * shifted[j].truncated(order - 2 * i);
        QRat factor = q_pow(i * (i + 1) / 2) / QRat(qpochhammer(2, 2, i));
        v = v + prod.shift_mul(2 * i) * factor;
    }
    return v;
}

CheckWitness contiguous_check_0f1(const Rational& a, int order) {
    Rational pivot = a * (a - 1);
    if (pivot == 0) throw std::invalid_argument("contiguous_check_0f1: a(a-1) vanishes");
    Series lhs = hyp0f1(a - 1, order) - hyp0f1(a, order);
    Series rhs = (hyp0f1(a + 1, order) * QRat(1 / pivot)).shift_mul(1).truncated(order);
    return compare_series("0F1 contiguous relation at a=" + to_string(a), lhs, rhs, order);
}

CheckWitness contiguous_check_0phi1(int i, int a_exponent, int order) {
    if (i < 1) throw std::invalid_argument("contiguous_check_0phi1: i must be positive");
    auto f = [&](int idx) {
        return hyp0phi1({a_exponent + idx, 1}, order).compose_scale(q_pow(idx), 1);
    };
    Series lhs = f(i - 1) - f(i);
    QRat factor = q_pow(i - 1) / (one_minus_q_pow(a_exponent + i - 1) * one_minus_q_pow(a_exponent + i));
    Series rhs = (f(i + 1) * factor).shift_mul(1).truncated(order);
    return compare_series("0Phi1 contiguous relation at i=" + std::to_string(i), lhs, rhs, order);
}

CheckWitness star_unstar_check(int order) {
    const std::pair<TrigKind, TrigKind> pairs[] = {{TrigKind::Cos, TrigKind::CosStar},
                                                   {TrigKind::Sin, TrigKind::SinStar}};
    for (const auto& [plain, star] : pairs) {
        Series base = q_trig(plain, order);
        Series mapped('z', order);
        for (int m = 0; m <= order; ++m) {
            // x -> -x/q contributes (-1)^m q^{-m} on the x^m coefficient.
            QRat c = base.coeff(m).subst_q_inverse() * QRat::q_power(-m);
            if (m % 2 == 1) c = -c;
            mapped.set_coeff(m, c);
        }
        auto witness = compare_series(plain == TrigKind::Cos ? "cos* vs cos_{1/q}(-x/q)"
                                                             : "sin* vs sin_{1/q}(-x/q)",
                                      q_trig(star, order), mapped, order);
        if (!witness.ok) return witness;
    }
    return {};
}

CheckWitness cauchy_binomial_check(int n, int step) {
    for (int t = 0; t <= n; ++t) {
        const Rational a(t);
        QPoly lhs(1);
        for (int i = 0; i < n; ++i)
            lhs *= QPoly(1) - QPoly::monomial(a, step * i);
        QPoly rhs;
        Rational neg_a_pow(1);
        for (int k = 0; k <= n; ++k) {
            rhs += qbinomial(n, k, step) * QPoly::monomial(neg_a_pow, step * k * (k - 1) / 2);
            neg_a_pow *= -a;
        }
        if (lhs != rhs)
            return {false, "Cauchy binomial: n=" + std::to_string(n) + " a=" + to_string(a) +
                               ": " + lhs.to_string() + " != " + rhs.to_string()};
    }
    // Collapse used with base q^2 and a = 1: the sum telescopes to [n = 0].
    QPoly collapse;
    Rational sign(1);
    for (int k = 0; k <= n; ++k) {
        collapse += qbinomial(n, k, 2) * QPoly::monomial(sign, k * (k - 1));
        sign = -sign;
    }
    QPoly expected = n == 0 ? QPoly(1) : QPoly();
    if (collapse != expected)
        return {false, "Cauchy collapse (1;q^2)_n: n=" + std::to_string(n) + ": got " +
                           collapse.to_string()};
    return {};
}

Series ky_generating_function(int k, int r, int order) {
    if (k < 2) throw std::invalid_argument("ky_generating_function: k must be >= 2");
    if (r < 1 || r > k) throw std::invalid_argument("ky_generating_function: require 1 <= r <= k");
    Series num('t', order);
    for (int n = 0; n * k + r <= order; ++n) {
        Rational sign = n % 2 == 0 ? 1 : -1;
        num.set_coeff(n * k + r, QRat(QPoly(sign), qpoch_q(n * k + r)));
    }
    Series den('t', order);
    for (int n = 0; n * k <= order; ++n) {
        Rational sign = n % 2 == 0 ? 1 : -1;
        den.set_coeff(n * k, QRat(QPoly(sign), qpoch_q(n * k)));
    }
    return num / den;
}

CheckWitness derivative_system_check(int k, int order) {
    if (k < 2) throw std::invalid_argument("derivative_system_check: k must be >= 2");
    if (order < 1) throw std::invalid_argument("derivative_system_check: order must be >= 1");
    std::vector<Rational> count(order + 2);
    for (int m = 1; m <= order + 1; ++m) count[m] = permstats::f_poly(m, k).eval_at_one();

    std::vector<Series> egf;  // egf[r-1] = F_r through order+1
    for (int r = 1; r <= k; ++r) {
        Series f('t', order + 1);
        for (int m = r; m <= order + 1; m += k)
            f.set_coeff(m, QRat(count[m] / Rational(factorial(m))));
        egf.push_back(f);
    }

    for (int r = 1; r <= k; ++r) {
        Series lhs = egf[r - 1].derivative();
        Series rhs = (egf[k - 2] * egf[r - 1]).truncated(order);
        rhs = r == 1 ? rhs + Series::constant('t', order, QRat(1)) : rhs + egf[r - 2].truncated(order);
        auto witness = compare_series("derivative system k=" + std::to_string(k) +
                                          " r=" + std::to_string(r),
                                      lhs, rhs, order);
        if (!witness.ok) return witness;
    }

    if (k == 2) {
        // Collapse to the classical pair: F_1 is the tangent Maclaurin
        // series and F_2 + 1 the secant one.
        for (int m = 0; m <= order + 1; ++m) {
            Rational expected = Rational(permstats::euler_number(m)) / Rational(factorial(m));
            const Series& f = egf[m % 2 == 1 ? 0 : 1];
            QRat got = f.coeff(m);
            if (m == 0) got += QRat(1);
            if (got != QRat(expected))
                return {false, "k=2 collapse: coefficient of t^" + std::to_string(m) + ": " +
                                   got.to_string() + " != " + to_string(expected)};
        }
    }
    return {};
}

}  // namespace qcombin::qfun
