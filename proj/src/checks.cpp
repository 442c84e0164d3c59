#include "qcombin/checks.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "qcombin/paths.hpp"
#include "qcombin/permstats.hpp"
#include "qcombin/tableaux.hpp"

namespace qcombin::checks {

namespace {

using permstats::AltVariant;
using permstats::QEulerVariant;
using qfun::CheckWitness;

long get(const Params& p, const std::string& name) { return p.at(name); }

CheckWitness ok() { return {}; }

CheckWitness fail(const std::string& detail) { return {false, detail}; }

Integer catalan(int n) {
    Integer c = binomial(2 * n, n);
    Integer out;
    mpz_divexact_ui(out.get_mpz_t(), c.get_mpz_t(), n + 1);
    return out;
}

QPoly tmaj_polynomial(const tableaux::SkewShape& shape) {
    const int n = shape.size();
    std::vector<Integer> counts(static_cast<size_t>(n) * (n > 0 ? n - 1 : 0) / 2 + 1, Integer(0));
    tableaux::for_each_syt(shape, [&](const tableaux::Tableau& t) { ++counts[tableaux::tmaj(t)]; });
    std::vector<Rational> coeffs;
    coeffs.reserve(counts.size());
    for (const auto& c : counts) coeffs.emplace_back(c);
    return QPoly(std::move(coeffs));
}

Integer syt_count(const tableaux::SkewShape& shape) {
    Integer count = 0;
    tableaux::for_each_syt(shape, [&](const tableaux::Tableau&) { ++count; });
    return count;
}

// ---------------------------------------------------------------------------
// Check bodies
// ---------------------------------------------------------------------------

CheckWitness check_fig2_e7(const Params&) {
    std::vector<Rational> weights;
    Rational total(0);
    paths::for_each_dyck(3, [&](const paths::DyckPath& p) {
        Rational w(1);
        for (int h : p.heights) w *= make_rational(1, 2 * h + 1);
        weights.push_back(w);
        total += w;
    });
    std::vector<Rational> expected{make_rational(1, 27), make_rational(1, 135), make_rational(1, 135),
                                   make_rational(1, 675), make_rational(1, 1575)};
    std::sort(weights.begin(), weights.end());
    std::sort(expected.begin(), expected.end());
    if (weights != expected) {
        std::ostringstream out;
        out << "path weight multiset mismatch:";
        for (const auto& w : weights) out << " " << to_string(w);
        return fail(out.str());
    }
    Rational sum = Rational(factorial(7)) * total;
    if (sum != 272) return fail("7! * sum = " + to_string(sum) + " != 272");
    if (permstats::euler_number(7) != 272) return fail("E_7 != 272");
    return ok();
}

CheckWitness check_thm5_tangent(const Params& p) {
    for (int n = 0; n <= get(p, "n_max"); ++n) {
        QRat lhs = paths::weighted_sum(n, paths::tangent_weight());
        QRat cleared = lhs * QRat(qpoch_q(2 * n + 1));
        if (!cleared.is_polynomial())
            return fail("n=" + std::to_string(n) + ": (q;q)_{2n+1} * sum is not a polynomial");
        const QPoly& poly = cleared.as_polynomial();
        QPoly rev = permstats::q_euler(2 * n + 1, QEulerVariant::Rev);
        if (poly != rev)
            return fail("n=" + std::to_string(n) + ": path sum gives " + poly.to_string() +
                        " but RevAlt enumeration gives " + rev.to_string());
        QPoly alt = permstats::q_euler(2 * n + 1, QEulerVariant::Alt);
        if (poly != alt)
            return fail("n=" + std::to_string(n) + ": path sum gives " + poly.to_string() +
                        " but Alt enumeration gives " + alt.to_string());
    }
    return ok();
}

CheckWitness check_thm6(const Params& p, paths::SecantVariant variant) {
    const auto q_variant =
        variant == paths::SecantVariant::Star ? QEulerVariant::Alt : QEulerVariant::Rev;
    for (int n = 0; n <= get(p, "n_max"); ++n) {
        QRat lhs = paths::secant_weighted_sum(n, variant);
        QRat cleared = lhs * QRat(qpoch_q(2 * n));
        if (!cleared.is_polynomial())
            return fail("n=" + std::to_string(n) + ": (q;q)_{2n} * sum is not a polynomial");
        QPoly expected = permstats::q_euler(2 * n, q_variant);
        if (cleared.as_polynomial() != expected)
            return fail("n=" + std::to_string(n) + ": path sum gives " +
                        cleared.as_polynomial().to_string() + " but enumeration gives " +
                        expected.to_string());
    }
    return ok();
}

CheckWitness check_eq_imp(const Params& p) {
    for (int n = 0; n <= get(p, "n_max"); ++n) {
        QPoly e = permstats::q_euler(n, QEulerVariant::Rev);
        QPoly estar = permstats::q_euler(n, QEulerVariant::Alt);
        QPoly flipped = e.reverse_shift(n * (n - 1) / 2);
        if (estar != flipped)
            return fail("n=" + std::to_string(n) + ": E*_n = " + estar.to_string() +
                        " but q^C(n,2) E_n(1/q) = " + flipped.to_string());
    }
    return ok();
}

// Runs fn over every skew shape with |lambda| <= size_max; stops at the first
// reported failure.
CheckWitness for_each_skew_shape(int size_max,
                                 const std::function<CheckWitness(const tableaux::SkewShape&)>& fn) {
    CheckWitness result;
    for (int size = 0; size <= size_max && result.ok; ++size) {
        tableaux::for_each_partition_of(size, [&](const tableaux::Partition& lambda) {
            if (!result.ok) return;
            tableaux::for_each_subpartition(lambda, [&](const tableaux::Partition& mu) {
                if (!result.ok) return;
                CheckWitness w = fn(tableaux::SkewShape(lambda, mu));
                if (!w.ok) result = w;
            });
        });
    }
    return result;
}

CheckWitness check_mpp(const Params& p) {
    return for_each_skew_shape(get(p, "n_max"), [](const tableaux::SkewShape& shape) {
        QPoly lhs = tableaux::mpp_q_sum(shape);
        QPoly rhs = tmaj_polynomial(shape);
        if (lhs != rhs)
            return fail("shape " + shape.to_string() + ": hook side " + lhs.to_string() +
                        " != tmaj side " + rhs.to_string());
        if (lhs.eval_at_one() != Rational(tableaux::naruse_count(shape)))
            return fail("shape " + shape.to_string() + ": q=1 value disagrees with hook count");
        return ok();
    });
}

CheckWitness check_naruse(const Params& p) {
    return for_each_skew_shape(get(p, "n_max"), [](const tableaux::SkewShape& shape) {
        Integer lhs = tableaux::naruse_count(shape);
        Integer rhs = syt_count(shape);
        if (lhs != rhs)
            return fail("shape " + shape.to_string() + ": hook formula " + lhs.get_str() +
                        " != enumeration " + rhs.get_str());
        return ok();
    });
}

CheckWitness check_frt(const Params& p) {
    CheckWitness result;
    for (int size = 0; size <= get(p, "n_max") && result.ok; ++size) {
        tableaux::for_each_partition_of(size, [&](const tableaux::Partition& lambda) {
            if (!result.ok) return;
            Integer lhs = tableaux::frt_count(lambda);
            Integer rhs = syt_count(tableaux::SkewShape(lambda, tableaux::Partition()));
            if (lhs != rhs)
                result = fail("lambda " + lambda.to_string() + ": hook formula " + lhs.get_str() +
                              " != enumeration " + rhs.get_str());
        });
    }
    return result;
}

CheckWitness check_strip_bijection(const Params& p) {
    const long n_max = get(p, "n_max");
    for (int n = 1; n <= n_max; ++n) {
        auto strip = tableaux::staircase_strip(n, tableaux::StripVariant::Full);
        auto diagrams = tableaux::excited_diagrams(strip);
        if (Integer(diagrams.size()) != catalan(n))
            return fail("n=" + std::to_string(n) + ": " + std::to_string(diagrams.size()) +
                        " excited diagrams, Catalan gives " + catalan(n).get_str());
    }
    for (int n = 1; n <= std::min<long>(n_max, 3); ++n) {
        auto strip = tableaux::staircase_strip(n, tableaux::StripVariant::Full);
        QPoly lhs = tmaj_polynomial(strip);
        QRat cleared = paths::weighted_sum(n, paths::tangent_weight()) * QRat(qpoch_q(2 * n + 1));
        if (!cleared.is_polynomial() || lhs != cleared.as_polynomial())
            return fail("n=" + std::to_string(n) + ": tmaj polynomial " + lhs.to_string() +
                        " != cleared path sum " + cleared.to_string());

        // Reading bijection: distinct alternating words carrying tmaj to
        // maj of the inverse.
        std::set<permstats::Perm> image;
        bool good = true;
        std::string detail;
        tableaux::for_each_syt(strip, [&](const tableaux::Tableau& t) {
            if (!good) return;
            permstats::Perm word = tableaux::strip_to_perm(t);
            auto profile = permstats::descent_set(word);
            for (size_t i = 0; i < profile.descent_set.size(); ++i)
                if (profile.descent_set[i] != 2 * static_cast<int>(i) + 1) {
                    good = false;
                    detail = "word " + word.to_string() + " is not alternating";
                    return;
                }
            if (profile.descent_set.size() != static_cast<size_t>(n)) {
                good = false;
                detail = "word " + word.to_string() + " has wrong descent count";
                return;
            }
            if (permstats::maj_of_inverse(word) != tableaux::tmaj(t)) {
                good = false;
                detail = "word " + word.to_string() + " does not carry tmaj";
                return;
            }
            image.insert(word);
        });
        if (!good) return fail("n=" + std::to_string(n) + ": " + detail);
        if (Integer(image.size()) != permstats::euler_number(2 * n + 1))
            return fail("n=" + std::to_string(n) + ": reading map image has " +
                        std::to_string(image.size()) + " words, E_{2n+1} = " +
                        permstats::euler_number(2 * n + 1).get_str());
    }
    return ok();
}

CheckWitness check_lambert_cf(const Params& p) {
    const int depth = static_cast<int>(get(p, "depth"));
    const int order = static_cast<int>(get(p, "order"));
    Series conv = qfun::cf_convergent(qfun::lambert_tan_cf(depth), depth, order);
    for (int m = 0; m <= order; ++m) {
        QRat expected;
        if (m % 2 == 1)
            expected = QRat(Rational(permstats::euler_number(m)) / Rational(factorial(m)));
        if (conv.coeff(m) != expected)
            return fail("coefficient of z^" + std::to_string(m) + ": convergent " +
                        conv.coeff(m).to_string() + " != E_m/m! = " + expected.to_string());
    }
    return ok();
}

CheckWitness check_tanq_cf(const Params& p) {
    const int depth = static_cast<int>(get(p, "depth"));
    const int order = static_cast<int>(get(p, "order"));
    Series conv = qfun::cf_convergent(qfun::tan_q_cf(depth), depth, order);
    Series tan = qfun::q_trig(qfun::TrigKind::Tan, order);
    if (auto bad = first_mismatch(conv, tan, order))
        return fail("coefficient of z^" + std::to_string(*bad) + ": convergent " +
                    conv.coeff(*bad).to_string() + " != tan_q " + tan.coeff(*bad).to_string());
    return ok();
}

CheckWitness check_lemma5(const Params& p) {
    for (int i = 1; i <= get(p, "n_max"); ++i) {
        auto w = qfun::contiguous_check_0phi1(i, 1, static_cast<int>(get(p, "order")));
        if (!w.ok) return w;
    }
    return ok();
}

CheckWitness check_lemma3(const Params& p) {
    for (const Rational& a : {make_rational(3, 2), make_rational(5, 2)}) {
        auto w = qfun::contiguous_check_0f1(a, static_cast<int>(get(p, "order")));
        if (!w.ok) return w;
    }
    return ok();
}

CheckWitness check_eq_sdf(const Params& p) {
    const int order = static_cast<int>(get(p, "order"));
    for (int h = 0; h <= get(p, "n_max"); ++h) {
        Series lhs = paths::shifted_path_series(h, order);
        Series rhs = qfun::shifted_dyck_ratio(h, order);
        if (auto bad = first_mismatch(lhs, rhs, order))
            return fail("h=" + std::to_string(h) + ": coefficient of z^" + std::to_string(*bad) +
                        ": path series " + lhs.coeff(*bad).to_string() + " != ratio " +
                        rhs.coeff(*bad).to_string());
    }
    return ok();
}

CheckWitness check_cauchy(const Params& p) {
    for (int n = 0; n <= get(p, "n_max"); ++n) {
        auto w = qfun::cauchy_binomial_check(n, 1);
        if (!w.ok) return w;
    }
    return ok();
}

CheckWitness check_ky(const Params& p) {
    const int order = static_cast<int>(get(p, "order"));
    for (int k = 2; k <= get(p, "k"); ++k) {
        for (int r = 1; r <= k; ++r) {
            Series f = qfun::ky_generating_function(k, r, order);
            for (int m = 0; m <= order; ++m) {
                const bool supported = m >= r && (m - r) % k == 0;
                if (!supported) {
                    if (!f.coeff(m).is_zero())
                        return fail("k=" + std::to_string(k) + " r=" + std::to_string(r) +
                                    ": unexpected t^" + std::to_string(m) + " coefficient " +
                                    f.coeff(m).to_string());
                    continue;
                }
                QRat cleared = f.coeff(m) * QRat(qpoch_q(m));
                if (!cleared.is_polynomial())
                    return fail("k=" + std::to_string(k) + " r=" + std::to_string(r) + " m=" +
                                std::to_string(m) + ": coefficient does not clear (q;q)_m");
                QPoly expected = permstats::f_poly(m, k);
                if (cleared.as_polynomial() != expected)
                    return fail("k=" + std::to_string(k) + " r=" + std::to_string(r) + " m=" +
                                std::to_string(m) + ": series gives " +
                                cleared.as_polynomial().to_string() + " but enumeration gives " +
                                expected.to_string());
            }
        }
        if (k == 2) {
            Series f1 = qfun::ky_generating_function(2, 1, order).renamed('z');
            if (auto bad = first_mismatch(f1, qfun::q_trig(qfun::TrigKind::Tan, order), order))
                return fail("k=2: F_1 != tan_q at t^" + std::to_string(*bad));
            Series f2 = qfun::ky_generating_function(2, 2, order).renamed('z');
            Series sec_minus_one = qfun::q_trig(qfun::TrigKind::Sec, order) -
                                   Series::constant('z', order, QRat(1));
            if (auto bad = first_mismatch(f2, sec_minus_one, order))
                return fail("k=2: F_2 != sec_q - 1 at t^" + std::to_string(*bad));
        }
    }
    return ok();
}

CheckWitness check_deriv_system(const Params& p) {
    for (int k = 2; k <= get(p, "k"); ++k) {
        auto w = qfun::derivative_system_check(k, static_cast<int>(get(p, "order")));
        if (!w.ok) return w;
    }
    return ok();
}

CheckWitness check_star_unstar(const Params& p) {
    const int order = static_cast<int>(get(p, "order"));
    auto w = qfun::star_unstar_check(order);
    if (!w.ok) return w;
    Series tan = qfun::q_trig(qfun::TrigKind::Tan, order + 1);
    Series tan_star = qfun::q_trig(qfun::TrigKind::TanStar, order + 1);
    if (auto bad = first_mismatch(tan, tan_star, order + 1))
        return fail("tan*_q != tan_q at z^" + std::to_string(*bad));
    return ok();
}

CheckWitness check_kpath_exploratory(const Params& p) {
    const int k = static_cast<int>(get(p, "k"));
    std::ostringstream report;
    report << "weight q^h/(1-q^(h+floor(h/(k-1))+1)), k=" << k << ", target f_L(q)/(q;q)_L";
    const std::pair<paths::KVertexRange, const char*> ranges[] = {
        {paths::KVertexRange::All, "vertices 0..L"},
        {paths::KVertexRange::SkipOrigin, "vertices 1..L"},
        {paths::KVertexRange::DropLast, "vertices 0..L-1"}};
    for (int length = 1; length <= get(p, "n_max"); ++length) {
        QRat target = QRat(permstats::f_poly(length, k)) / QRat(qpoch_q(length));
        report << "\nL=" << length << ":";
        for (const auto& [range, name] : ranges) {
            const bool match = paths::k_weighted_sum(k, length, range) == target;
            report << " [" << name << ": " << (match ? "match" : "mismatch") << "]";
        }
    }
    return {true, report.str()};
}

// ---------------------------------------------------------------------------
// Registry
// ---------------------------------------------------------------------------

std::vector<CheckDef> build_registry() {
    std::vector<CheckDef> defs;

    defs.push_back({"fig2-e7",
                    "five weighted paths of D_3 with w(h)=1/(2h+1) sum to 272 = E_7",
                    false,
                    {},
                    {},
                    {},
                    nullptr,
                    check_fig2_e7});

    defs.push_back({"thm5-tangent",
                    "(q;q)_{2n+1} * tangent-weighted Dyck sum equals E_{2n+1}(q)",
                    false,
                    {{"n_max", 3}},
                    {{"n_max", 5}},
                    {{"n_max", 6}},
                    nullptr,
                    check_thm5_tangent});

    defs.push_back({"thm6-secant-star",
                    "(q;q)_{2n} * star secant-weighted Dyck sum equals E*_{2n}(q)",
                    false,
                    {{"n_max", 3}},
                    {{"n_max", 5}},
                    {{"n_max", 6}},
                    nullptr,
                    [](const Params& p) { return check_thm6(p, paths::SecantVariant::Star); }});

    defs.push_back({"thm6-secant-plain",
                    "(q;q)_{2n} * plain secant-weighted Dyck sum equals E_{2n}(q)",
                    false,
                    {{"n_max", 3}},
                    {{"n_max", 5}},
                    {{"n_max", 6}},
                    nullptr,
                    [](const Params& p) { return check_thm6(p, paths::SecantVariant::Plain); }});

    defs.push_back({"eq-imp",
                    "E*_n(q) = q^C(n,2) E_n(1/q)",
                    false,
                    {{"n_max", 7}},
                    {{"n_max", 10}},
                    {{"n_max", 12}},
                    nullptr,
                    check_eq_imp});

    defs.push_back({"mpp-qhook",
                    "q-hook formula equals the tmaj generating polynomial on all skew shapes",
                    false,
                    {{"n_max", 5}},
                    {{"n_max", 7}},
                    {{"n_max", 8}},
                    nullptr,
                    check_mpp});

    defs.push_back({"naruse",
                    "skew hook formula counts standard tableaux on all skew shapes",
                    false,
                    {{"n_max", 5}},
                    {{"n_max", 7}},
                    {{"n_max", 8}},
                    nullptr,
                    check_naruse});

    defs.push_back({"frt-hook",
                    "hook length formula counts standard tableaux of straight shapes",
                    false,
                    {{"n_max", 6}},
                    {{"n_max", 7}},
                    {{"n_max", 8}},
                    nullptr,
                    check_frt});

    defs.push_back({"strip-bijection",
                    "staircase strips: excited diagrams are Catalan-many; tmaj matches the "
                    "cleared tangent path sum; reading words are alternating",
                    false,
                    {{"n_max", 4}},
                    {{"n_max", 6}},
                    {{"n_max", 7}},
                    nullptr,
                    check_strip_bijection});

    defs.push_back({"lambert-cf",
                    "tangent continued fraction matches the tan Maclaurin coefficients E_m/m!",
                    false,
                    {{"depth", 5}, {"order", 11}},
                    {{"depth", 8}, {"order", 17}},
                    {{"depth", 20}, {"order", 41}},
                    [](const Params& p) {
                        if (get(p, "order") > 2 * get(p, "depth") + 1)
                            throw std::invalid_argument(
                                "lambert-cf: depth d only determines orders <= 2d+1");
                    },
                    check_lambert_cf});

    defs.push_back({"tanq-cf",
                    "q-tangent continued fraction matches the tan_q series",
                    false,
                    {{"depth", 3}, {"order", 7}},
                    {{"depth", 5}, {"order", 11}},
                    {{"depth", 10}, {"order", 21}},
                    [](const Params& p) {
                        if (get(p, "order") > 2 * get(p, "depth") + 1)
                            throw std::invalid_argument(
                                "tanq-cf: depth d only determines orders <= 2d+1");
                    },
                    check_tanq_cf});

    defs.push_back({"lemma3-contiguous",
                    "0F1 three-term contiguous relation at a = 3/2 and 5/2",
                    false,
                    {{"order", 6}},
                    {{"order", 8}},
                    {{"order", 16}},
                    nullptr,
                    check_lemma3});

    defs.push_back({"lemma5-contiguous",
                    "0Phi1 three-term contiguous relation for i = 1..n_max",
                    false,
                    {{"n_max", 2}, {"order", 6}},
                    {{"n_max", 4}, {"order", 8}},
                    {{"n_max", 8}, {"order", 16}},
                    nullptr,
                    check_lemma5});

    defs.push_back({"eq-sdf",
                    "shifted weighted Dyck path series equals the 0Phi1 ratio for h = 0..n_max",
                    false,
                    {{"n_max", 2}, {"order", 6}},
                    {{"n_max", 3}, {"order", 8}},
                    {{"n_max", 5}, {"order", 12}},
                    nullptr,
                    check_eq_sdf});

    defs.push_back({"cauchy-binomial",
                    "Cauchy binomial theorem plus the (1;q^2)_n collapse",
                    false,
                    {{"n_max", 5}},
                    {{"n_max", 8}},
                    {{"n_max", 12}},
                    nullptr,
                    check_cauchy});

    defs.push_back({"ky",
                    "k-alternating generating function: (q;q)_m [t^m]F_r = f_m(q)",
                    false,
                    {{"k", 3}, {"order", 8}},
                    {{"k", 4}, {"order", 12}},
                    {{"k", 5}, {"order", 12}},
                    nullptr,
                    check_ky});

    defs.push_back({"deriv-system",
                    "q=1 differential system F'_r = F_{k-1}F_r + F_{r-1} on EGFs",
                    false,
                    {{"k", 3}, {"order", 8}},
                    {{"k", 3}, {"order", 10}},
                    {{"k", 4}, {"order", 11}},
                    nullptr,
                    check_deriv_system});

    defs.push_back({"star-unstar",
                    "cos*/sin* match cos/sin under q -> 1/q, x -> -x/q; tan* = tan",
                    false,
                    {{"order", 6}},
                    {{"order", 8}},
                    {{"order", 12}},
                    nullptr,
                    check_star_unstar});

    defs.push_back({"kpath-exploratory",
                    "k-Dyck weighted sum vs f_L(q)/(q;q)_L under three vertex ranges",
                    true,
                    {{"k", 3}, {"n_max", 5}},
                    {{"k", 3}, {"n_max", 7}},
                    {{"k", 4}, {"n_max", 10}},
                    nullptr,
                    check_kpath_exploratory});

    return defs;
}

}  // namespace

std::string status_name(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Exploratory: return "exploratory";
    }
    return "unknown";
}

const std::vector<CheckDef>& registry() {
    static const std::vector<CheckDef> defs = build_registry();
    return defs;
}

const CheckDef& find_check(const std::string& id) {
    for (const auto& def : registry())
        if (def.id == id) return def;
    std::ostringstream out;
    out << "unknown check id \"" << id << "\"; valid ids:";
    for (const auto& def : registry()) out << " " << def.id;
    throw std::invalid_argument(out.str());
}

namespace {

CheckResult run_def(const CheckDef& def, Params params) {
    CheckResult result;
    result.id = def.id;
    result.params = params;
    const auto start = std::chrono::steady_clock::now();
    try {
        qfun::CheckWitness w = def.run(params);
        if (def.exploratory) {
            result.status = Status::Exploratory;
            result.witness = w.detail;
        } else if (w.ok) {
            result.status = Status::Pass;
        } else {
            result.status = Status::Fail;
            result.witness = w.detail;
        }
    } catch (const std::exception& e) {
        result.status = Status::Fail;
        result.witness = std::string("exception: ") + e.what();
    }
    const auto stop = std::chrono::steady_clock::now();
    result.millis = std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
    return result;
}

Params merged_params(const CheckDef& def, const Params& overrides) {
    Params params = def.full_params;
    for (const auto& [name, value] : overrides) {
        if (!params.count(name)) {
            std::ostringstream out;
            out << "check \"" << def.id << "\" does not take parameter \"" << name << "\";";
            if (params.empty()) {
                out << " it takes none";
            } else {
                out << " it takes:";
                for (const auto& [known, unused] : params) out << " " << known;
            }
            throw std::invalid_argument(out.str());
        }
        params[name] = value;
    }
    for (const auto& [name, value] : params) {
        if (value < 0)
            throw std::invalid_argument("check \"" + def.id + "\": parameter " + name +
                                        " must be nonnegative");
        const long ceiling = def.max_params.at(name);
        if (value > ceiling)
            throw std::invalid_argument("check \"" + def.id + "\": parameter " + name + "=" +
                                        std::to_string(value) + " exceeds the feasibility bound " +
                                        std::to_string(ceiling));
    }
    if (def.validate) def.validate(params);
    return params;
}

}  // namespace

CheckResult run_check(const std::string& id, const Params& overrides) {
    const CheckDef& def = find_check(id);
    return run_def(def, merged_params(def, overrides));
}

Report run_suite(Profile profile, const std::optional<std::vector<std::string>>& selection) {
    Report report;
    report.profile = profile;
    for (const auto& def : registry()) {
        if (selection &&
            std::find(selection->begin(), selection->end(), def.id) == selection->end())
            continue;
        Params params = profile == Profile::Quick ? def.quick_params : def.full_params;
        CheckResult result = run_def(def, std::move(params));
        switch (result.status) {
            case Status::Pass: ++report.passed; break;
            case Status::Fail: ++report.failed; break;
            case Status::Exploratory: ++report.exploratory; break;
        }
        report.checks.push_back(std::move(result));
    }
    return report;
}

namespace {

nlohmann::json result_json(const CheckResult& result) {
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [name, value] : result.params) params[name] = value;
    return {{"id", result.id},
            {"params", params},
            {"status", status_name(result.status)},
            {"witness", result.witness.empty() ? nlohmann::json() : nlohmann::json(result.witness)},
            {"millis", result.millis}};
}

}  // namespace

std::string result_to_json(const CheckResult& result) { return result_json(result).dump(2); }

std::string report_to_json(const Report& report) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& result : report.checks) checks.push_back(result_json(result));
    nlohmann::json doc{{"suite", report.suite_passed() ? "pass" : "fail"},
                       {"profile", report.profile == Profile::Quick ? "quick" : "full"},
                       {"checks", checks},
                       {"summary",
                        {{"passed", report.passed},
                         {"failed", report.failed},
                         {"exploratory", report.exploratory}}}};
    return doc.dump(2);
}

std::string report_to_text(const Report& report) {
    std::ostringstream out;
    for (const auto& result : report.checks) {
        out << "[" << status_name(result.status) << "] " << result.id << " (" << result.millis
            << " ms)";
        if (result.status == Status::Fail) out << "\n  witness: " << result.witness;
        out << "\n";
    }
    out << "summary: " << report.passed << " passed, " << report.failed << " failed, "
        << report.exploratory << " exploratory\n";
    out << "suite: " << (report.suite_passed() ? "pass" : "fail") << "\n";
    return out.str();
}

std::string emit_table(TableKind kind, int n_max, TableFormat format, int k) {
    if (n_max < 0) throw std::invalid_argument("emit_table: n_max must be nonnegative");
    struct Row {
        int n;
        std::string value;
    };
    std::vector<Row> rows;
    std::string kind_name, value_header;
    switch (kind) {
        case TableKind::Euler: {
            if (n_max > 40) throw std::invalid_argument("emit_table: euler table capped at n_max=40");
            kind_name = "euler";
            value_header = "E_n";
            for (int n = 0; n <= n_max; ++n)
                rows.push_back({n, permstats::euler_number(n).get_str()});
            break;
        }
        case TableKind::QEuler: {
            if (n_max > 12) throw std::invalid_argument("emit_table: q_euler table capped at n_max=12");
            kind_name = "q_euler";
            value_header = "E_n(q)";
            for (int n = 0; n <= n_max; ++n)
                rows.push_back({n, permstats::q_euler(n, QEulerVariant::Rev).to_string()});
            break;
        }
        case TableKind::FPoly: {
            if (n_max > 12) throw std::invalid_argument("emit_table: f_poly table capped at n_max=12");
            if (k < 2) throw std::invalid_argument("emit_table: k must be >= 2");
            kind_name = "f_poly";
            value_header = "f_n(q)";
            for (int n = 1; n <= n_max; ++n)
                rows.push_back({n, permstats::f_poly(n, k).to_string()});
            break;
        }
        case TableKind::PathCounts: {
            if (n_max > 12)
                throw std::invalid_argument("emit_table: path_counts table capped at n_max=12");
            kind_name = "path_counts";
            value_header = "|D_n|";
            for (int n = 0; n <= n_max; ++n) {
                long long count = 0;
                paths::for_each_dyck(n, [&](const paths::DyckPath&) { ++count; });
                rows.push_back({n, std::to_string(count)});
            }
            break;
        }
    }

    std::ostringstream out;
    switch (format) {
        case TableFormat::Md:
            out << "| n | " << value_header << " |\n|---|---|\n";
            for (const auto& row : rows) out << "| " << row.n << " | " << row.value << " |\n";
            break;
        case TableFormat::Csv:
            out << "n," << value_header << "\n";
            for (const auto& row : rows) out << row.n << ",\"" << row.value << "\"\n";
            break;
        case TableFormat::Json: {
            nlohmann::json doc;
            doc["kind"] = kind_name;
            nlohmann::json list = nlohmann::json::array();
            for (const auto& row : rows) list.push_back({{"n", row.n}, {"value", row.value}});
            doc["rows"] = list;
            out << doc.dump(2);
            break;
        }
    }
    return out.str();
}

}  // namespace qcombin::checks
