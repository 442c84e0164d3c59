#pragma once

#include <functional>
#include <vector>

#include "qcombin/qrat.hpp"
#include "qcombin/series.hpp"

namespace qcombin::paths {

/// Dyck path of length 2n as its height sequence (h_0, ..., h_{2n}):
/// h_0 = h_{2n} = 0, steps of +-1, never below zero.
struct DyckPath {
    std::vector<int> heights;
    int semilength() const { return static_cast<int>(heights.size() - 1) / 2; }
};

/// Enumerates D_n in lexicographic step order (up before down).
void for_each_dyck(int n, const std::function<void(const DyckPath&)>& fn);

/// Vertex weight: (height, position) -> QRat, with a flag selecting whether
/// the origin vertex 0 enters the product.
struct WeightFn {
    enum class Range { AllVertices, SkipOrigin };
    Range range = Range::AllVertices;
    std::function<QRat(int height, int position)> weight;
};

/// q^h / (1 - q^{2h+1}) over every vertex.
WeightFn tangent_weight();
/// 1/(2h+1) over every vertex (the q -> 1 specialization of the above).
WeightFn odd_reciprocal_weight();

enum class SecantVariant { Star, Plain };

/// Kronecker-corrected weights over vertices 1..2n: the exponent 2h+1 drops
/// by one on the initial maximal ascent (h_i = i), and the Plain variant also
/// drops the q^h numerator there.
WeightFn secant_weight(SecantVariant variant);

/// Sum over D_n of the product of vertex weights.
QRat weighted_sum(int n, const WeightFn& w);

QRat secant_weighted_sum(int n, SecantVariant variant);

/// Generating series of h-shifted weighted Dyck paths: the z^{2m} coefficient
/// is the weighted sum over D_m with weight q^{x+h}/(1 - q^{2(x+h)+1}).
Series shifted_path_series(int h, int order);

/// Path with steps +(k-1)/-1 of length L = nk+r (0 < r <= k), from height 0
/// down to height k-r, never below zero.
struct KDyckPath {
    int k = 2;
    std::vector<int> heights;
};

void for_each_k_dyck(int k, int length, const std::function<void(const KDyckPath&)>& fn);

/// Which vertices enter the k-path product; the source identity leaves the
/// index range ambiguous, so all readings are exposed.
enum class KVertexRange { All, SkipOrigin, DropLast };

/// Weight q^h / (1 - q^{h + floor(h/(k-1)) + 1}) at height h.
QRat k_vertex_weight(int k, int h);

QRat k_weighted_sum(int k, int length, KVertexRange range);

}  // namespace qcombin::paths
