#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "clusterhodge/linalg.hpp"

namespace clusterhodge {

/// Label of a basis vector: `a` is the exterior monomial (or face), `i` the anticlique.
struct BasisLabel {
    std::uint64_t a = 0;
    std::uint64_t i = 0;
    auto operator<=>(const BasisLabel&) const = default;
};

/// Finite cochain complex of based Q-vector spaces. Space p sits in degree offset + p;
/// differentials[p] maps space p to space p + 1.
struct CochainComplexQ {
    int offset = 0;
    std::vector<std::vector<BasisLabel>> bases;
    std::vector<SparseMatrixQ> differentials;

    std::size_t space_count() const { return bases.size(); }
    /// Dimension of the space in cohomological degree `degree` (0 outside the range).
    std::size_t dim(int degree) const;
    std::size_t total_dim() const;
    /// Differential leaving `degree`; an empty matrix of the right shape at the ends.
    SparseMatrixQ differential(int degree) const;

    /// Nonzero cohomology dimensions keyed by degree.
    std::map<int, long> cohomology_dims() const;
    bool d_squared_zero() const;
    /// Throws ShapeMismatch on inconsistent sizes.
    void check_shapes() const;
};

/// Explicit cohomology basis in one degree: cocycle representatives and a reducer
/// that expresses any cocycle in them.
class CohomologyBasis {
public:
    CohomologyBasis(const CochainComplexQ& c, int degree);

    std::size_t dimension() const { return reps_.size(); }
    const std::vector<SparseVector>& representatives() const { return reps_; }
    /// Coordinates of the class of a cocycle. Throws InvalidArgument if z is not a cocycle.
    SparseVector coordinates(const SparseVector& z) const;

private:
    SparseMatrixQ outgoing_;
    std::vector<SparseVector> reps_;
    EchelonBasis quotient_{true};
};

}  // namespace clusterhodge
