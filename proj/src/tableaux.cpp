#include "qcombin/tableaux.hpp"

#include "qcombin/qrat.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qcombin::tableaux {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::part(int i) const {
    if (i < 1) throw std::invalid_argument("Partition: row index is 1-based");
    return i <= length() ? parts_[i - 1] : 0;
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return Partition();
    std::vector<int> conj(parts_[0]);
    for (int j = 1; j <= parts_[0]; ++j) {
        int count = 0;
        for (int p : parts_)
            if (p >= j) ++count;
        conj[j - 1] = count;
    }
    return Partition(std::move(conj));
}

bool Partition::contains(const Partition& mu) const {
    for (int i = 1; i <= mu.length(); ++i)
        if (mu.part(i) > part(i)) return false;
    return true;
}

std::string Partition::to_string() const {
    std::ostringstream out;
    out << "(";
    for (int i = 0; i < length(); ++i) out << (i ? "," : "") << parts_[i];
    out << ")";
    return out.str();
}

int hook(const Partition& lambda, int row, int col) {
    if (row < 1 || col < 1 || col > lambda.part(row))
        throw std::invalid_argument("hook: cell outside the diagram");
    const Partition conj = lambda.conjugate();
    return (lambda.part(row) - col) + (conj.part(col) - row) + 1;
}

SkewShape::SkewShape(Partition outer_, Partition inner_)
    : outer(std::move(outer_)), inner(std::move(inner_)) {
    if (!outer.contains(inner)) throw std::invalid_argument("SkewShape: inner not contained in outer");
}

std::vector<std::pair<int, int>> SkewShape::cells() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= outer.length(); ++i)
        for (int j = inner.part(i) + 1; j <= outer.part(i); ++j) out.emplace_back(i, j);
    return out;
}

Tableau::Tableau(SkewShape shape, std::vector<std::vector<int>> row_entries)
    : shape_(std::move(shape)), rows_(std::move(row_entries)) {
    const int n = shape_.size();
    if (static_cast<int>(rows_.size()) != shape_.outer.length())
        throw std::invalid_argument("Tableau: row count does not match the shape");
    row_of_.assign(n + 1, 0);
    for (int i = 1; i <= static_cast<int>(rows_.size()); ++i) {
        const int expected = shape_.outer.part(i) - shape_.inner.part(i);
        if (static_cast<int>(rows_[i - 1].size()) != expected)
            throw std::invalid_argument("Tableau: row length does not match the shape");
        for (int v : rows_[i - 1]) {
            if (v < 1 || v > n || row_of_[v] != 0)
                throw std::invalid_argument("Tableau: entries must be a bijection with 1..n");
            row_of_[v] = i;
        }
    }
}

std::string Tableau::to_string() const {
    std::ostringstream out;
    for (int i = row_count(); i >= 1; --i) {
        out << std::string(2 * shape_.inner.part(i), ' ');
        for (size_t j = 0; j < rows_[i - 1].size(); ++j) out << (j ? " " : "") << rows_[i - 1][j];
        if (i > 1) out << "\n";
    }
    return out.str();
}

namespace {

struct SytGen {
    const SkewShape* shape;
    int n;
    std::vector<int> fill;  // next column to fill per row, 1-based rows
    std::vector<std::vector<int>> rows;
    const std::function<void(const Tableau&)>* fn;

    void place(int value) {
        if (value > n) {
            (*fn)(Tableau(*shape, rows));
            return;
        }
        const int row_count = shape->outer.length();
        for (int i = 1; i <= row_count; ++i) {
            const int col = fill[i];
            if (col > shape->outer.part(i)) continue;
            // The cell below must be filled already unless it lies in the
            // inner shape; left neighbors are filled by construction.
            if (i >= 2 && col > shape->inner.part(i - 1) && fill[i - 1] <= col) continue;
            fill[i] = col + 1;
            rows[i - 1].push_back(value);
            place(value + 1);
            rows[i - 1].pop_back();
            fill[i] = col;
        }
    }
};

}  // namespace

void for_each_syt(const SkewShape& shape, const std::function<void(const Tableau&)>& fn) {
    SytGen gen;
    gen.shape = &shape;
    gen.n = shape.size();
    gen.fill.assign(shape.outer.length() + 1, 0);
    for (int i = 1; i <= shape.outer.length(); ++i) gen.fill[i] = shape.inner.part(i) + 1;
    gen.rows.assign(shape.outer.length(), {});
    gen.fn = &fn;
    gen.place(1);
}

long tmaj(const Tableau& t) {
    long total = 0;
    for (int i = 1; i < t.size(); ++i)
        if (t.row_of(i + 1) > t.row_of(i)) total += i;
    return total;
}

Integer frt_count(const Partition& lambda) {
    Integer product(1);
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda.part(i); ++j) product *= hook(lambda, i, j);
    Integer fact = factorial(lambda.size());
    Integer count;
    mpz_divexact(count.get_mpz_t(), fact.get_mpz_t(), product.get_mpz_t());
    return count;
}

std::vector<ExcitedDiagram> excited_diagrams(const SkewShape& shape) {
    ExcitedDiagram start;
    for (int i = 1; i <= shape.inner.length(); ++i)
        for (int j = 1; j <= shape.inner.part(i); ++j) start.emplace_back(i, j);
    std::sort(start.begin(), start.end());

    std::set<ExcitedDiagram> seen{start};
    std::vector<ExcitedDiagram> frontier{start};
    auto in_lambda = [&](int r, int c) { return r >= 1 && c >= 1 && c <= shape.outer.part(r); };
    while (!frontier.empty()) {
        std::vector<ExcitedDiagram> next;
        for (const auto& diagram : frontier) {
            auto occupied = [&](int r, int c) {
                return std::binary_search(diagram.begin(), diagram.end(), std::make_pair(r, c));
            };
            for (size_t idx = 0; idx < diagram.size(); ++idx) {
                const auto [r, c] = diagram[idx];
                if (!in_lambda(r + 1, c + 1) || !in_lambda(r, c + 1) || !in_lambda(r + 1, c)) continue;
                if (occupied(r, c + 1) || occupied(r + 1, c) || occupied(r + 1, c + 1)) continue;
                ExcitedDiagram moved = diagram;
                moved[idx] = {r + 1, c + 1};
                std::sort(moved.begin(), moved.end());
                if (seen.insert(moved).second) next.push_back(std::move(moved));
            }
        }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

Integer naruse_count(const SkewShape& shape) {
    Rational total(0);
    for (const auto& diagram : excited_diagrams(shape)) {
        Integer product(1);
        for (int i = 1; i <= shape.outer.length(); ++i)
            for (int j = 1; j <= shape.outer.part(i); ++j) {
                if (std::binary_search(diagram.begin(), diagram.end(), std::make_pair(i, j))) continue;
                product *= hook(shape.outer, i, j);
            }
        total += make_rational(Integer(1), product);
    }
    total *= factorial(shape.size());
    if (total.get_den() != 1)
        throw std::logic_error("naruse_count: sum did not reduce to an integer");
    return total.get_num();
}

QPoly mpp_q_sum(const SkewShape& shape) {
    const Partition conj = shape.outer.conjugate();
    QRat total;
    for (const auto& diagram : excited_diagrams(shape)) {
        // One rational function per diagram: q^(sum of arm-leg exponents)
        // over the product of (1 - q^hook) across uncovered cells.
        int exponent = 0;
        QPoly den(1);
        for (int i = 1; i <= shape.outer.length(); ++i)
            for (int j = 1; j <= shape.outer.part(i); ++j) {
                if (std::binary_search(diagram.begin(), diagram.end(), std::make_pair(i, j))) continue;
                exponent += conj.part(j) - i;
                den *= QPoly(1) - QPoly::monomial(Rational(1), hook(shape.outer, i, j));
            }
        total += QRat(QPoly::monomial(Rational(1), exponent), den);
    }
    total *= QRat(qpoch_q(shape.size()));
    return total.as_polynomial();
}

SkewShape staircase_strip(int n, StripVariant variant) {
    if (n < 1) throw std::invalid_argument("staircase_strip: n must be positive");
    std::vector<int> outer;
    for (int p = n + 1; p >= (variant == StripVariant::Full ? 1 : 2); --p) outer.push_back(p);
    std::vector<int> inner;
    for (int p = n - 1; p >= 1; --p) inner.push_back(p);
    return SkewShape(Partition(std::move(outer)), Partition(std::move(inner)));
}

permstats::Perm strip_to_perm(const Tableau& t) {
    const int cells = t.size();
    if (cells < 1) throw std::invalid_argument("strip_to_perm: empty tableau");
    const int n = cells % 2 == 1 ? (cells - 1) / 2 : cells / 2;
    const StripVariant variant = cells % 2 == 1 ? StripVariant::Full : StripVariant::Truncated;
    const bool single_cell_strip =
        cells == 1 && t.shape() == SkewShape(Partition({1}), Partition());
    if (!single_cell_strip && (n < 1 || !(t.shape() == staircase_strip(n, variant))))
        throw std::invalid_argument("strip_to_perm: shape is not a staircase strip");
    std::vector<int> word;
    word.reserve(cells);
    for (int i = t.row_count(); i >= 1; --i)
        for (int v : t.row(i)) word.push_back(v);
    return permstats::Perm(std::move(word));
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& parts,
                    const std::function<void(const Partition&)>& fn) {
    if (remaining == 0) {
        fn(Partition(parts));
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        parts.push_back(p);
        partitions_rec(remaining - p, p, parts, fn);
        parts.pop_back();
    }
}

void subpartitions_rec(const Partition& lambda, int row, int prev, std::vector<int>& parts,
                       const std::function<void(const Partition&)>& fn) {
    if (row > lambda.length()) {
        fn(Partition(parts));
        return;
    }
    const int bound = std::min(lambda.part(row), prev);
    // A zero part ends the partition: lower rows cannot be nonzero again.
    fn(Partition(parts));
    for (int p = 1; p <= bound; ++p) {
        parts.push_back(p);
        subpartitions_rec(lambda, row + 1, p, parts, fn);
        parts.pop_back();
    }
}

}  // namespace

void for_each_partition_of(int n, const std::function<void(const Partition&)>& fn) {
    if (n < 0) throw std::invalid_argument("for_each_partition_of: n must be nonnegative");
    std::vector<int> parts;
    partitions_rec(n, n == 0 ? 1 : n, parts, fn);
}

void for_each_subpartition(const Partition& lambda, const std::function<void(const Partition&)>& fn) {
    std::vector<int> parts;
    subpartitions_rec(lambda, 1, lambda.length() == 0 ? 0 : lambda.part(1), parts, fn);
}

}  // namespace qcombin::tableaux
