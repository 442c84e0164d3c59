#include "qcombin/permstats.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qcombin::permstats {

Perm::Perm(std::vector<int> one_line) : values_(std::move(one_line)) {
    const int n = size();
    std::vector<bool> seen(n + 1, false);
    for (int v : values_) {
        if (v < 1 || v > n || seen[v]) throw std::invalid_argument("Perm: not a bijection on {1..n}");
        seen[v] = true;
    }
}

std::string Perm::to_string() const {
    std::ostringstream out;
    out << "(";
    for (int i = 0; i < size(); ++i) out << (i ? "," : "") << values_[i];
    out << ")";
    return out.str();
}

DescentProfile descent_set(const Perm& p) {
    DescentProfile d;
    for (int i = 1; i < p.size(); ++i) {
        if (p.at(i) > p.at(i + 1)) {
            d.descent_set.push_back(i);
            d.maj += i;
        }
    }
    return d;
}

Perm inverse(const Perm& p) {
    std::vector<int> inv(p.size());
    for (int i = 1; i <= p.size(); ++i) inv[p.at(i) - 1] = i;
    return Perm(std::move(inv));
}

long maj_of_inverse(const Perm& p) {
    // Build the inverse word, then read its descents directly.
    const int n = p.size();
    std::vector<int> inv(n);
    for (int i = 1; i <= n; ++i) inv[p.at(i) - 1] = i;
    long maj = 0;
    for (int i = 1; i < n; ++i)
        if (inv[i - 1] > inv[i]) maj += i;
    return maj;
}

Perm complement_reverse(const Perm& p) {
    const int n = p.size();
    std::vector<int> out(n);
    for (int i = 1; i <= n; ++i) out[i - 1] = n + 1 - p.at(n + 1 - i);
    return Perm(std::move(out));
}

namespace {

struct DescentBacktracker {
    int n;
    std::vector<bool> wants_descent;  // index i: comparison between positions i and i+1
    std::vector<int> word;
    std::vector<bool> used;
    const std::function<void(const Perm&)>* fn;

    void run() {
        word.clear();
        word.reserve(n);
        used.assign(n + 1, false);
        extend();
    }

    void extend() {
        const int pos = static_cast<int>(word.size());
        if (pos == n) {
            (*fn)(Perm(word));
            return;
        }
        for (int v = 1; v <= n; ++v) {
            if (used[v]) continue;
            if (pos >= 1) {
                const bool descent = word[pos - 1] > v;
                if (descent != wants_descent[pos]) continue;
            }
            used[v] = true;
            word.push_back(v);
            extend();
            word.pop_back();
            used[v] = false;
        }
    }
};

}  // namespace

void for_each_with_descent_set(int n, const std::vector<int>& descents,
                               const std::function<void(const Perm&)>& fn) {
    if (n <= 0) throw std::invalid_argument("for_each_with_descent_set: n must be positive");
    DescentBacktracker bt;
    bt.n = n;
    bt.wants_descent.assign(n, false);
    for (int d : descents) {
        if (d < 1 || d >= n) throw std::invalid_argument("for_each_with_descent_set: descent out of range");
        bt.wants_descent[d] = true;
    }
    bt.fn = &fn;
    bt.run();
}

void for_each_alternating(int n, AltVariant variant, const std::function<void(const Perm&)>& fn) {
    std::vector<int> descents;
    for (int i = variant == AltVariant::Alt ? 1 : 2; i < n; i += 2) descents.push_back(i);
    for_each_with_descent_set(n, descents, fn);
}

void for_each_k_alternating(int n, int k, const std::function<void(const Perm&)>& fn) {
    if (k < 2) throw std::invalid_argument("for_each_k_alternating: k must be >= 2");
    std::vector<int> descents;
    for (int i = k; i < n; i += k) descents.push_back(i);
    for_each_with_descent_set(n, descents, fn);
}

Integer euler_number(int n, EulerMethod method) {
    if (n < 0) throw std::invalid_argument("euler_number: n must be nonnegative");
    if (n == 0) return 1;
    if (method == EulerMethod::Enumerate) {
        Integer count = 0;
        for_each_alternating(n, AltVariant::Alt, [&](const Perm&) { ++count; });
        return count;
    }
    // Entringer triangle: E(m,0) = 0, E(m,j) = E(m,j-1) + E(m-1,m-j),
    // zigzag number is E(n,n).
    std::vector<Integer> prev{1};
    for (int m = 1; m <= n; ++m) {
        std::vector<Integer> row(m + 1);
        row[0] = 0;
        for (int j = 1; j <= m; ++j) row[j] = row[j - 1] + prev[m - j];
        prev = std::move(row);
    }
    return prev[n];
}

namespace {

QPoly maj_inverse_polynomial(int n, const std::vector<int>& descents) {
    // Exact integer histogram over maj values; converted to a QPoly at the end.
    const long max_maj = static_cast<long>(n) * (n - 1) / 2;
    std::vector<Integer> counts(max_maj + 1, Integer(0));
    for_each_with_descent_set(n, descents, [&](const Perm& p) { ++counts[maj_of_inverse(p)]; });
    std::vector<Rational> coeffs;
    coeffs.reserve(counts.size());
    for (const auto& c : counts) coeffs.emplace_back(c);
    return QPoly(std::move(coeffs));
}

}  // namespace

QPoly q_euler(int n, QEulerVariant variant) {
    if (n < 0) throw std::invalid_argument("q_euler: n must be nonnegative");
    if (n == 0) return QPoly(1);
    std::vector<int> descents;
    for (int i = variant == QEulerVariant::Alt ? 1 : 2; i < n; i += 2) descents.push_back(i);
    return maj_inverse_polynomial(n, descents);
}

QPoly f_poly(int n, int k) {
    if (n <= 0) throw std::invalid_argument("f_poly: n must be positive");
    if (k < 2) throw std::invalid_argument("f_poly: k must be >= 2");
    std::vector<int> descents;
    for (int i = k; i < n; i += k) descents.push_back(i);
    return maj_inverse_polynomial(n, descents);
}

}  // namespace qcombin::permstats
