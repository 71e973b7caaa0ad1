#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "clusterhodge/graph.hpp"
#include "clusterhodge/linalg.hpp"
#include "clusterhodge/smith.hpp"

namespace clusterhodge {

/// Integer (n+m) x n matrix whose top n x n block is skew-symmetric.
/// Indices are 0-based; rows n..n+m-1 are frozen.
class ExtendedExchangeMatrix {
public:
    ExtendedExchangeMatrix() = default;

    /// Throws ShapeMismatch or NotSkewSymmetric (with the 1-based offending entry).
    static ExtendedExchangeMatrix validate(const std::vector<std::vector<std::int64_t>>& rows, int n, int m);
    /// Top block b stacked over the identity.
    static ExtendedExchangeMatrix principal(const std::vector<std::vector<std::int64_t>>& b);

    int n() const { return n_; }
    int m() const { return m_; }
    int row_count() const { return n_ + m_; }
    std::int64_t operator()(int i, int j) const {
        return entries_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j)];
    }
    std::vector<std::vector<std::int64_t>> rows() const;
    std::vector<std::vector<std::int64_t>> top_block() const;
    IntMatrix to_integer_matrix() const;
    /// Columns in `cols` (mask over mutable indices), all rows.
    IntMatrix columns(Mask cols) const;

    bool is_principal() const;
    /// Appends one frozen row.
    ExtendedExchangeMatrix with_frozen_row(const std::vector<std::int64_t>& row) const;

    bool operator==(const ExtendedExchangeMatrix& o) const {
        return n_ == o.n_ && m_ == o.m_ && entries_ == o.entries_;
    }
    std::string to_string() const;

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<std::int64_t> entries_;
};

/// Mutation in direction k (0-based). Throws IndexOutOfRange, TooLarge on overflow.
ExtendedExchangeMatrix mutate(const ExtendedExchangeMatrix& b, int k);

struct Quiver {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> arcs;  // sorted
};

Quiver quiver(const ExtendedExchangeMatrix& b);
Graph underlying_graph(const ExtendedExchangeMatrix& b);
bool is_acyclic(const ExtendedExchangeMatrix& b);

enum class RankClass { NotFullRank, FullRank, ReallyFullRank };
const char* to_string(RankClass r);
RankClass rank_class(const ExtendedExchangeMatrix& b);

/// Invariant factors d_1 | d_2 | ... each at least 2.
struct FiniteAbelianGroup {
    std::vector<Integer> invariant_factors;
    Integer order() const;
    Integer exponent() const;
    bool operator==(const FiniteAbelianGroup& o) const { return invariant_factors == o.invariant_factors; }
    std::string to_string() const;
};

/// Torsion part of Z^rows / columns(Z^cols) for an integer matrix.
FiniteAbelianGroup torsion_of_cokernel(const IntMatrix& a, std::size_t rows, std::size_t cols);

/// Z^n / B^T Z^{n+m}; throws NotFullRank.
FiniteAbelianGroup cokernel_group(const ExtendedExchangeMatrix& b);

/// Canonical residues, one per invariant factor.
struct Character {
    std::vector<Integer> coordinates;
    bool operator==(const Character& o) const { return coordinates == o.coordinates; }
    bool operator<(const Character& o) const { return coordinates < o.coordinates; }
};

/// X* = (B Q^n meet Z^{n+m}) / B Z^n with explicit lifts.
class CharacterGroup {
public:
    /// Throws NotFullRank.
    explicit CharacterGroup(const ExtendedExchangeMatrix& b);

    const FiniteAbelianGroup& group() const { return group_; }
    std::vector<Character> elements() const;
    Character identity() const;

    /// Integer vector z in B Q^n representing chi.
    std::vector<Integer> lift(const Character& chi) const;
    /// Class of z; throws InvalidArgument if z is not in B Q^n.
    Character classify(const std::vector<Integer>& z) const;
    /// u with z = B u for the canonical lift.
    std::vector<Rational> solve(const std::vector<Integer>& z) const;
    /// J(chi): mutable indices where u is not integral.
    Mask support(const Character& chi) const;
    /// chi lies in X*(I) iff its support is inside I.
    bool in_subgroup(const Character& chi, Mask anticlique) const { return (support(chi) & ~anticlique) == 0; }
    /// Elements of X*(I); throws NotAnticlique.
    std::vector<Character> subgroup(Mask anticlique) const;

private:
    ExtendedExchangeMatrix b_;
    Graph graph_;
    SmithForm snf_;
    FiniteAbelianGroup group_;
    std::size_t first_nontrivial_ = 0;
};

/// Data attached to a character by the reduction to a smaller exchange matrix.
struct CharacterReduction {
    bool zero = false;  // support is not an anticlique
    int shift = 0;      // kappa = |J(chi)|
    Mask support = 0;
    Mask kept = 0;      // K(chi)
    ExtendedExchangeMatrix reduced;
    /// Factors of (1 + xy) to divide out of the reduced table when the target row
    /// count n + m - 2 kappa is below 2|K|.
    int torus_deficit = 0;
};

CharacterReduction reduce_character(const ExtendedExchangeMatrix& b, const CharacterGroup& x, const Character& chi);

/// Reduction for a given support J (everything but J is determined by it).
CharacterReduction reduce_support(const ExtendedExchangeMatrix& b, Mask support);

}  // namespace clusterhodge
