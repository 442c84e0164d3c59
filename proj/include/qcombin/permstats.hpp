#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qcombin/qpoly.hpp"

namespace qcombin::permstats {

/// Permutation of {1..n} in one-line notation.
class Perm {
public:
    Perm() = default;
    /// Validates that the word is a bijection on {1..n}.
    explicit Perm(std::vector<int> one_line);

    int size() const { return static_cast<int>(values_.size()); }
    /// 1-based access: value at position i.
    int at(int i) const { return values_[i - 1]; }
    const std::vector<int>& values() const { return values_; }

    friend bool operator==(const Perm& a, const Perm& b) { return a.values_ == b.values_; }
    friend bool operator<(const Perm& a, const Perm& b) { return a.values_ < b.values_; }

    std::string to_string() const;

private:
    std::vector<int> values_;
};

struct DescentProfile {
    std::vector<int> descent_set;  // positions i with sigma_i > sigma_{i+1}, sorted
    long maj = 0;                  // sum of the descent set
};

DescentProfile descent_set(const Perm& p);
Perm inverse(const Perm& p);
long maj_of_inverse(const Perm& p);

/// sigma'(i) = n+1 - sigma(n+1-i): reverse the word, complement the values.
Perm complement_reverse(const Perm& p);

/// Enumerates every permutation of {1..n} whose descent set is exactly
/// `descents`, by backtracking on adjacent comparisons (never by filtering
/// all of S_n). Deterministic lexicographic order.
void for_each_with_descent_set(int n, const std::vector<int>& descents,
                               const std::function<void(const Perm&)>& fn);

enum class AltVariant { Alt, RevAlt };

/// Alt: descents at the odd positions; RevAlt: at the even positions.
void for_each_alternating(int n, AltVariant variant, const std::function<void(const Perm&)>& fn);

/// Descent set {k, 2k, ..., (ceil(n/k)-1)k}; k = 2 recovers RevAlt.
void for_each_k_alternating(int n, int k, const std::function<void(const Perm&)>& fn);

enum class EulerMethod { Seidel, Enumerate };

/// E_n by the boustrophedon (Entringer) triangle or by counting Alt_n.
Integer euler_number(int n, EulerMethod method = EulerMethod::Seidel);

enum class QEulerVariant { Rev, Alt };

/// Generating polynomial of maj(sigma^{-1}) over RevAlt_n (Rev) or Alt_n (Alt).
QPoly q_euler(int n, QEulerVariant variant);

/// Generating polynomial of maj(sigma^{-1}) over the k-alternating
/// permutations of {1..n}; k = 2 gives q_euler(n, Rev).
QPoly f_poly(int n, int k);

}  // namespace qcombin::permstats
