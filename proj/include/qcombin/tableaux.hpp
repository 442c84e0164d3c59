#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "qcombin/permstats.hpp"
#include "qcombin/qpoly.hpp"

namespace qcombin::tableaux {

/// Integer partition: weakly decreasing positive parts. French orientation
/// throughout the module: row 1 is the bottom row, columns grow rightward.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    int length() const { return static_cast<int>(parts_.size()); }
    int size() const;
    /// 1-based part access, zero beyond the last row.
    int part(int i) const;
    const std::vector<int>& parts() const { return parts_; }

    Partition conjugate() const;
    bool contains(const Partition& mu) const;

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
    friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

    std::string to_string() const;

private:
    std::vector<int> parts_;
};

/// Hook length of cell (row, col) in lambda: arm + leg + 1.
/// Throws when the cell lies outside the diagram.
int hook(const Partition& lambda, int row, int col);

/// Skew shape lambda/mu with mu contained in lambda.
struct SkewShape {
    Partition outer, inner;
    SkewShape() = default;
    SkewShape(Partition outer_, Partition inner_);
    int size() const { return outer.size() - inner.size(); }
    /// Cells (row, col) of the skew diagram, row-major bottom-up.
    std::vector<std::pair<int, int>> cells() const;
    friend bool operator==(const SkewShape& a, const SkewShape& b) {
        return a.outer == b.outer && a.inner == b.inner;
    }
    std::string to_string() const { return outer.to_string() + "/" + inner.to_string(); }
};

/// Standard filling of a skew shape: entries 1..n strictly increasing along
/// rows (left to right) and up columns.
class Tableau {
public:
    Tableau(SkewShape shape, std::vector<std::vector<int>> row_entries);
    const SkewShape& shape() const { return shape_; }
    /// Entries of row i (1-based), left to right; empty rows allowed.
    const std::vector<int>& row(int i) const { return rows_[i - 1]; }
    int row_count() const { return static_cast<int>(rows_.size()); }
    /// Row containing a given entry.
    int row_of(int value) const { return row_of_[value]; }
    int size() const { return static_cast<int>(row_of_.size()) - 1; }
    std::string to_string() const;

private:
    SkewShape shape_;
    std::vector<std::vector<int>> rows_;
    std::vector<int> row_of_;
};

/// Enumerates every standard Young tableau of the shape, each exactly once.
void for_each_syt(const SkewShape& shape, const std::function<void(const Tableau&)>& fn);

/// Sum of the indices i whose successor i+1 sits in a strictly higher row.
long tmaj(const Tableau& t);

/// n! / prod of hooks.
Integer frt_count(const Partition& lambda);

/// An excited diagram as its sorted cell set.
using ExcitedDiagram = std::vector<std::pair<int, int>>;

/// Reachability closure of [mu] inside [lambda] under the move
/// (i,j) -> (i+1,j+1), legal when (i,j+1), (i+1,j), (i+1,j+1) are all inside
/// [lambda] and unoccupied. Deduplicated breadth-first search; results are
/// returned sorted for determinism.
std::vector<ExcitedDiagram> excited_diagrams(const SkewShape& shape);

/// |lambda/mu|! * sum over excited diagrams of 1/prod of uncovered hooks.
Integer naruse_count(const SkewShape& shape);

/// (q;q)_n * sum over excited diagrams of
/// prod_{(i,j) in [lambda]\D} q^{lambda'_j - i} / (1 - q^{h(i,j)}),
/// returned as the polynomial it provably reduces to.
QPoly mpp_q_sum(const SkewShape& shape);

enum class StripVariant { Full, Truncated };

/// Staircase border strips: Full(n) has 2n+1 cells (outer (n+1,n,...,1),
/// inner (n-1,...,1)), Truncated(n) removes the topmost cell and has 2n.
SkewShape staircase_strip(int n, StripVariant variant);

/// Reads a staircase-strip tableau row by row, highest row first, left to
/// right within each row. Throws when the shape is not a staircase strip.
permstats::Perm strip_to_perm(const Tableau& t);

/// All partitions of n in lexicographically decreasing part order.
void for_each_partition_of(int n, const std::function<void(const Partition&)>& fn);

/// All partitions mu contained in lambda (including empty and lambda itself).
void for_each_subpartition(const Partition& lambda, const std::function<void(const Partition&)>& fn);

}  // namespace qcombin::tableaux
