#include "qcombin/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qcombin {

Series::Series(char var, int order) : var_(var), order_(order) {
    if (var != 'z' && var != 't') throw std::invalid_argument("Series: variable must be z or t");
    if (order < 0) throw std::invalid_argument("Series: negative order");
    coeffs_.assign(order + 1, QRat());
}

Series Series::constant(char var, int order, const QRat& value) {
    Series s(var, order);
    s.coeffs_[0] = value;
    return s;
}

Series Series::monomial(char var, int order, const QRat& value, int exponent) {
    Series s(var, order);
    if (exponent <= order) s.coeffs_[exponent] = value;
    return s;
}

const QRat& Series::coeff(int i) const {
    if (i < 0 || i > order_) throw std::out_of_range("Series: coefficient beyond order");
    return coeffs_[i];
}

void Series::set_coeff(int i, const QRat& value) {
    if (i < 0 || i > order_) throw std::out_of_range("Series: coefficient beyond order");
    coeffs_[i] = value;
}

void Series::require_same(const Series& a, const Series& b) {
    if (a.var_ != b.var_) throw std::domain_error("Series: variable mismatch");
}

Series Series::operator-() const {
    Series r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Series operator+(const Series& a, const Series& b) {
    Series::require_same(a, b);
    Series r(a.var_, std::min(a.order_, b.order_));
    for (int i = 0; i <= r.order_; ++i) r.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
    return r;
}

Series operator-(const Series& a, const Series& b) {
    Series::require_same(a, b);
    Series r(a.var_, std::min(a.order_, b.order_));
    for (int i = 0; i <= r.order_; ++i) r.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
    return r;
}

Series operator*(const Series& a, const Series& b) {
    Series::require_same(a, b);
    Series r(a.var_, std::min(a.order_, b.order_));
    for (int i = 0; i <= r.order_; ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (int j = 0; i + j <= r.order_; ++j) {
            if (b.coeffs_[j].is_zero()) continue;
            r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return r;
}

Series operator/(const Series& a, const Series& b) {
    Series::require_same(a, b);
    if (b.coeffs_[0].is_zero()) throw std::domain_error("Series: divisor has zero constant term");
    Series r(a.var_, std::min(a.order_, b.order_));
    for (int n = 0; n <= r.order_; ++n) {
        QRat acc = a.coeffs_[n];
        for (int i = 1; i <= n; ++i) {
            if (b.coeffs_[i].is_zero() || r.coeffs_[n - i].is_zero()) continue;
            acc -= b.coeffs_[i] * r.coeffs_[n - i];
        }
        r.coeffs_[n] = acc / b.coeffs_[0];
    }
    return r;
}

Series operator*(const Series& a, const QRat& c) {
    Series r(a);
    for (auto& v : r.coeffs_) v *= c;
    return r;
}

bool operator==(const Series& a, const Series& b) {
    return a.var_ == b.var_ && a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
}

Series Series::compose_scale(const QRat& c, int power) const {
    if (power != 1 && power != 2) throw std::invalid_argument("Series: compose power must be 1 or 2");
    Series r(var_, power * order_ + power - 1);
    QRat scale(1);
    for (int i = 0; i <= order_; ++i) {
        r.coeffs_[power * i] = coeffs_[i] * scale;
        scale *= c;
    }
    return r;
}

Series Series::shift_mul(int k) const {
    if (k < 0) throw std::invalid_argument("Series: negative shift");
    Series r(var_, order_ + k);
    for (int i = 0; i <= order_; ++i) r.coeffs_[i + k] = coeffs_[i];
    return r;
}

Series Series::derivative() const {
    if (order_ == 0) throw std::invalid_argument("Series: derivative needs order >= 1");
    Series r(var_, order_ - 1);
    for (int i = 1; i <= order_; ++i) r.coeffs_[i - 1] = coeffs_[i] * QRat(Rational(i));
    return r;
}

Series Series::truncated(int new_order) const {
    if (new_order > order_) throw std::invalid_argument("Series: cannot extend truncation order");
    Series r(var_, new_order);
    for (int i = 0; i <= new_order; ++i) r.coeffs_[i] = coeffs_[i];
    return r;
}

Series Series::renamed(char new_var) const {
    Series r(new_var, order_);
    r.coeffs_ = coeffs_;
    return r;
}

std::string Series::to_string() const {
    std::ostringstream out;
    bool any = false;
    for (int i = 0; i <= order_; ++i) {
        if (coeffs_[i].is_zero()) continue;
        if (any) out << " + ";
        out << "(" << coeffs_[i].to_string() << ")";
        if (i > 0) out << "*" << var_ << (i > 1 ? "^" + std::to_string(i) : "");
        any = true;
    }
    if (!any) out << "0";
    out << " + O(" << var_ << "^" << order_ + 1 << ")";
    return out.str();
}

std::optional<int> first_mismatch(const Series& a, const Series& b, int through_order) {
    if (a.var() != b.var()) throw std::domain_error("Series: variable mismatch");
    if (through_order > a.order() || through_order > b.order())
        throw std::invalid_argument("Series: comparison beyond truncation order");
    for (int i = 0; i <= through_order; ++i)
        if (a.coeff(i) != b.coeff(i)) return i;
    return std::nullopt;
}

}  // namespace qcombin
