#include "qcombin/paths.hpp"

#include <stdexcept>

namespace qcombin::paths {

namespace {

void extend_dyck(std::vector<int>& heights, int steps_left,
                 const std::function<void(const DyckPath&)>& fn) {
    if (steps_left == 0) {
        fn(DyckPath{heights});
        return;
    }
    const int h = heights.back();
    if (h + 1 <= steps_left - 1) {  // room to come back down
        heights.push_back(h + 1);
        extend_dyck(heights, steps_left - 1, fn);
        heights.pop_back();
    }
    if (h >= 1) {
        heights.push_back(h - 1);
        extend_dyck(heights, steps_left - 1, fn);
        heights.pop_back();
    }
}

}  // namespace

void for_each_dyck(int n, const std::function<void(const DyckPath&)>& fn) {
    if (n < 0) throw std::invalid_argument("for_each_dyck: n must be nonnegative");
    std::vector<int> heights{0};
    heights.reserve(2 * n + 1);
    extend_dyck(heights, 2 * n, fn);
}

WeightFn tangent_weight() {
    WeightFn w;
    w.range = WeightFn::Range::AllVertices;
    w.weight = [](int h, int) {
        return QRat(QPoly::monomial(Rational(1), h), QPoly(1) - QPoly::monomial(Rational(1), 2 * h + 1));
    };
    return w;
}

WeightFn odd_reciprocal_weight() {
    WeightFn w;
    w.range = WeightFn::Range::AllVertices;
    w.weight = [](int h, int) { return QRat(make_rational(1, 2 * h + 1)); };
    return w;
}

WeightFn secant_weight(SecantVariant variant) {
    WeightFn w;
    w.range = WeightFn::Range::SkipOrigin;
    w.weight = [variant](int h, int i) {
        const int delta = h == i ? 1 : 0;
        const int num_exp = variant == SecantVariant::Plain ? h - delta : h;
        return QRat(QPoly::monomial(Rational(1), num_exp),
                    QPoly(1) - QPoly::monomial(Rational(1), 2 * h + 1 - delta));
    };
    return w;
}

QRat weighted_sum(int n, const WeightFn& w) {
    QRat total;
    for_each_dyck(n, [&](const DyckPath& p) {
        QRat product(1);
        const int first = w.range == WeightFn::Range::SkipOrigin ? 1 : 0;
        for (int i = first; i < static_cast<int>(p.heights.size()); ++i)
            product *= w.weight(p.heights[i], i);
        total += product;
    });
    return total;
}

QRat secant_weighted_sum(int n, SecantVariant variant) {
    return weighted_sum(n, secant_weight(variant));
}

Series shifted_path_series(int h, int order) {
    if (h < 0) throw std::invalid_argument("shifted_path_series: h must be nonnegative");
    WeightFn shifted;
    shifted.range = WeightFn::Range::AllVertices;
    shifted.weight = [h](int x, int) {
        const int y = x + h;
        return QRat(QPoly::monomial(Rational(1), y), QPoly(1) - QPoly::monomial(Rational(1), 2 * y + 1));
    };
    Series s('z', order);
    for (int m = 0; 2 * m <= order; ++m) s.set_coeff(2 * m, weighted_sum(m, shifted));
    return s;
}

namespace {

struct KDyckGen {
    int k;
    int target;
    std::vector<int> heights;
    const std::function<void(const KDyckPath&)>* fn;

    // Endpoint is reachable from h in m steps iff (target + m - h) is a
    // nonnegative multiple of k no larger than m*k.
    bool reachable(int h, int m) const {
        const int excess = target + m - h;
        if (excess < 0 || excess % k != 0) return false;
        return excess / k <= m;
    }

    void extend(int steps_left) {
        if (steps_left == 0) {
            (*fn)(KDyckPath{k, heights});
            return;
        }
        const int h = heights.back();
        if (reachable(h + k - 1, steps_left - 1)) {
            heights.push_back(h + k - 1);
            extend(steps_left - 1);
            heights.pop_back();
        }
        if (h >= 1 && reachable(h - 1, steps_left - 1)) {
            heights.push_back(h - 1);
            extend(steps_left - 1);
            heights.pop_back();
        }
    }
};

}  // namespace

void for_each_k_dyck(int k, int length, const std::function<void(const KDyckPath&)>& fn) {
    if (k < 2) throw std::invalid_argument("for_each_k_dyck: k must be >= 2");
    if (length <= 0) throw std::invalid_argument("for_each_k_dyck: length must be positive");
    const int r = (length - 1) % k + 1;
    KDyckGen gen;
    gen.k = k;
    gen.target = k - r;
    gen.heights = {0};
    gen.fn = &fn;
    gen.extend(length);
}

QRat k_vertex_weight(int k, int h) {
    const int exp = h + h / (k - 1) + 1;
    return QRat(QPoly::monomial(Rational(1), h), QPoly(1) - QPoly::monomial(Rational(1), exp));
}

QRat k_weighted_sum(int k, int length, KVertexRange range) {
    QRat total;
    for_each_k_dyck(k, length, [&](const KDyckPath& p) {
        const int last = static_cast<int>(p.heights.size()) - 1;
        int first = range == KVertexRange::SkipOrigin ? 1 : 0;
        int stop = range == KVertexRange::DropLast ? last - 1 : last;
        QRat product(1);
        for (int i = first; i <= stop; ++i) product *= k_vertex_weight(k, p.heights[i]);
        total += product;
    });
    return total;
}

}  // namespace qcombin::paths
