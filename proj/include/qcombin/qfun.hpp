#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qcombin/series.hpp"

namespace qcombin::qfun {

/// Outcome of an exact identity check; on failure `detail` pinpoints the
/// first offending index or coefficient.
struct CheckWitness {
    bool ok = true;
    std::string detail;
};

/// A partial numerator or denominator: a short sparse polynomial in the
/// series variable (constants, monomials, or small sums thereof).
struct CfTerm {
    std::vector<std::pair<QRat, int>> monomials;
    static CfTerm constant(const QRat& c) { return {{{c, 0}}}; }
    static CfTerm monomial(const QRat& c, int power) { return {{{c, power}}}; }
    Series to_series(char var, int order) const;
};

/// Finite continued fraction a0/(b0 -+ a1/(b1 -+ a2/(b2 -+ ...))); the style
/// flag selects the sign joining consecutive levels.
struct ContinuedFraction {
    enum class Style { Minus, Plus };
    Style style = Style::Minus;
    char var = 'z';
    std::vector<CfTerm> numerators;    // a_0 .. a_d
    std::vector<CfTerm> denominators;  // b_0 .. b_d
    int depth() const { return static_cast<int>(numerators.size()) - 1; }
};

/// Bottom-up evaluation of the truncated fraction as a Series of the given
/// order. Throws when depth exceeds the stored partials or a division by a
/// series with zero constant term arises.
Series cf_convergent(const ContinuedFraction& cf, int depth, int order);

enum class StieltjesForm {
    Products,    // a_i = w(i-1)w(i) z^2, b_i = 1
    Normalized,  // a_i = z^2, b_i = 1/w(i)
};

/// Stieltjes fraction of a height-weighted Dyck path series; its depth-d
/// convergent matches the path series through z^{2d}. Throws on a zero weight.
ContinuedFraction stieltjes_from_weights(const std::function<QRat(int)>& weight, int depth,
                                         StieltjesForm form = StieltjesForm::Products);

/// z/1 (-) z^2/3 (-) z^2/5 (-) ... : the classical tangent fraction.
ContinuedFraction lambert_tan_cf(int depth);

/// z/(1-q) (-) z^2/((1-q^3)/q) (-) z^2/((1-q^5)/q^2) (-) ...
ContinuedFraction tan_q_cf(int depth);

/// Fraction equal to 0F1(a+1;z)/0F1(a;z), from the three-term contiguous
/// relation: 1/1 (+) k1 z/1 (+) k2 z/1 ... with k_i = 1/((a+i-1)(a+i)).
ContinuedFraction hyp0f1_ratio_cf(const Rational& a, int depth);

/// Fraction equal to 0Phi1(;q^{a+1};q;qz)/0Phi1(;q^a;q;z), with
/// k_i = q^{i-1}/((1-q^{a+i-1})(1-q^{a+i})).
ContinuedFraction hyp0phi1_ratio_cf(int a_exponent, int depth);

/// 0F1(a;z) = sum z^n / (n! (a)_n); a must not be a nonpositive integer.
Series hyp0f1(const Rational& a, int order, char var = 'z');

/// Parameters of 0Phi1: the parameter is q^param_exponent and the base is
/// q^base_step.
struct HypParams {
    int param_exponent = 1;
    int base_step = 1;
};

/// 0Phi1(;q^j;q^s;z) = sum z^n q^{s n(n-1)} / ((q^j;q^s)_n (q^s;q^s)_n).
Series hyp0phi1(const HypParams& params, int order, char var = 'z');

enum class TrigKind { Sin, Cos, SinStar, CosStar, Tan, Sec, TanStar, SecStar };

/// Exact truncations of the q-trigonometric series; Tan/Sec variants are the
/// quotients of the corresponding Sin/Cos truncations.
Series q_trig(TrigKind kind, int order);

/// Right-hand side of the shifted-path identity: the generating series of
/// h-shifted weighted Dyck paths as q^h/(1-q^{2h+1}) times a ratio of 0Phi1
/// values at base q^2.
Series shifted_dyck_ratio(int h, int order);

/// Ascent decomposition of the even-length weighted path series:
/// sum_i q^{i(i+1)/2}/(q^2;q^2)_i prod_{j<i} u_j(z) z^{2i}, which reproduces
/// sec*_q(z) - 1.
Series sec_star_ascent_series(int order);

/// Verifies 0F1(a-1) - 0F1(a) = z/(a(a-1)) 0F1(a+1) through the order.
CheckWitness contiguous_check_0f1(const Rational& a, int order);

/// Verifies f_{i-1} - f_i = z q^{i-1}/((1-q^{a+i-1})(1-q^{a+i})) f_{i+1}
/// for f_i = 0Phi1(;q^{a+i};q;z q^i) through the order.
CheckWitness contiguous_check_0phi1(int i, int a_exponent, int order);

/// Verifies cos*_q(x) = cos_{1/q}(-x/q) and sin*_q(x) = sin_{1/q}(-x/q).
CheckWitness star_unstar_check(int order);

/// Verifies (a;q^s)_n = sum_k qbinomial(n,k,s) (-a)^k q^{s k(k-1)/2} at n+1
/// rational values of a, plus the (1;q^2)_n collapse to [n = 0].
CheckWitness cauchy_binomial_check(int n, int step = 1);

/// F_r := sum_n f_{nk+r}(q) t^{nk+r} / (q;q)_{nk+r} as the ratio
/// (sum (-1)^n t^{nk+r}/(q;q)_{nk+r}) / (sum (-1)^n t^{nk}/(q;q)_{nk}).
Series ky_generating_function(int k, int r, int order);

/// Verifies the q=1 differential system F'_r = F_{k-1} F_r + F_{r-1}
/// (F'_1 = F_{k-1} F_1 + 1) on exponential generating functions built from
/// enumerated counts; for k=2 also pins F_1, F_2+1 to the tan and sec series.
CheckWitness derivative_system_check(int k, int order);

}  // namespace qcombin::qfun
