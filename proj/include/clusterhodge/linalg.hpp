#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

namespace clusterhodge {

using Integer = mpz_class;
using Rational = mpq_class;

struct SparseEntry {
    int index;
    Rational value;
    bool operator==(const SparseEntry& o) const { return index == o.index && value == o.value; }
};

/// Sorted by index, no explicit zeros.
using SparseVector = std::vector<SparseEntry>;

/// Returns a + c*b.
SparseVector add_scaled(const SparseVector& a, const Rational& c, const SparseVector& b);
SparseVector scaled(const SparseVector& a, const Rational& c);
SparseVector from_map(const std::map<int, Rational>& m);
Rational entry(const SparseVector& v, int index);

/// Column-major sparse rational matrix.
class SparseMatrixQ {
public:
    SparseMatrixQ() = default;
    SparseMatrixQ(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const SparseVector& column(int c) const { return columns_[static_cast<std::size_t>(c)]; }
    void set_column(int c, SparseVector v);
    /// Adds v to entry (r, c).
    void add(int r, int c, const Rational& v);
    Rational at(int r, int c) const;

    SparseVector apply(const SparseVector& x) const;
    SparseMatrixQ operator*(const SparseMatrixQ& rhs) const;
    SparseMatrixQ transpose() const;
    bool is_zero() const;
    std::size_t nonzeros() const;
    bool operator==(const SparseMatrixQ& o) const;

    static SparseMatrixQ from_dense(const std::vector<std::vector<Rational>>& rows);
    std::vector<std::vector<Rational>> to_dense() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<SparseVector> columns_;
};

/// Rank over Q by fraction-free elimination on integer-scaled rows.
std::size_t rank(const SparseMatrixQ& m);

/// Rank over Q through the rational echelon basis; used to cross-check rank().
std::size_t rank_rational(const SparseMatrixQ& m);

/// Incremental row-reduced basis of a subspace of Q^N.
/// Stored rows have leading coefficient 1 and vanish at every other row's pivot
/// that precedes their own pivot. With tracking on, each stored row remembers its
/// expression in the labelled generators that were inserted.
class EchelonBasis {
public:
    explicit EchelonBasis(bool track = false) : track_(track) {}

    std::size_t dimension() const { return rows_.size(); }
    bool tracking() const { return track_; }

    /// v = residue + sum coeffs[label] * generator(label).
    SparseVector reduce(const SparseVector& v, SparseVector* coeffs = nullptr) const;
    bool contains(const SparseVector& v) const { return reduce(v).empty(); }

    /// Returns true when v enlarged the span.
    bool insert(const SparseVector& v, int label = -1);

    const std::vector<SparseVector>& rows() const { return rows_; }
    std::vector<int> pivots() const;

private:
    bool track_;
    std::vector<SparseVector> rows_;
    std::vector<SparseVector> combos_;
    std::map<int, std::size_t> pivot_row_;
};

/// Basis of {x : m x = 0}.
std::vector<SparseVector> kernel_basis(const SparseMatrixQ& m);

/// Some x with m x = b, if one exists.
std::optional<SparseVector> solve(const SparseMatrixQ& m, const SparseVector& b);

/// Dense exact inverse; throws InvalidArgument if singular.
std::vector<std::vector<Rational>> inverse(const std::vector<std::vector<Rational>>& a);

}  // namespace clusterhodge
