#pragma once

#include <vector>

#include "clusterhodge/linalg.hpp"

namespace clusterhodge {

using IntMatrix = std::vector<std::vector<Integer>>;

/// u * a * v = diag(diagonal) with u, v unimodular; nonzero diagonal entries are
/// positive and each divides the next.
struct SmithForm {
    IntMatrix u, u_inv, v, v_inv;
    std::vector<Integer> diagonal;
    int rank = 0;
};

SmithForm smith_normal_form(const IntMatrix& a, std::size_t rows, std::size_t cols);

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
IntMatrix identity_matrix(std::size_t n);

}  // namespace clusterhodge
