#include "clusterhodge/cochain.hpp"

#include <string>

#include "clusterhodge/error.hpp"

namespace clusterhodge {

std::size_t CochainComplexQ::dim(int degree) const {
    const int p = degree - offset;
    if (p < 0 || p >= static_cast<int>(bases.size())) return 0;
    return bases[static_cast<std::size_t>(p)].size();
}

std::size_t CochainComplexQ::total_dim() const {
    std::size_t t = 0;
    for (const auto& b : bases) t += b.size();
    return t;
}

SparseMatrixQ CochainComplexQ::differential(int degree) const {
    const int p = degree - offset;
    if (p >= 0 && p < static_cast<int>(differentials.size())) return differentials[static_cast<std::size_t>(p)];
    return SparseMatrixQ(static_cast<int>(dim(degree + 1)), static_cast<int>(dim(degree)));
}

std::map<int, long> CochainComplexQ::cohomology_dims() const {
    std::vector<std::size_t> ranks(bases.size(), 0);
    for (std::size_t p = 0; p < differentials.size(); ++p) ranks[p] = rank(differentials[p]);
    std::map<int, long> out;
    for (std::size_t p = 0; p < bases.size(); ++p) {
        long h = static_cast<long>(bases[p].size()) - static_cast<long>(ranks[p]) -
                 (p > 0 ? static_cast<long>(ranks[p - 1]) : 0L);
        if (h != 0) out[offset + static_cast<int>(p)] = h;
    }
    return out;
}

bool CochainComplexQ::d_squared_zero() const {
    for (std::size_t p = 0; p + 1 < differentials.size(); ++p)
        if (!(differentials[p + 1] * differentials[p]).is_zero()) return false;
    return true;
}

void CochainComplexQ::check_shapes() const {
    if (!bases.empty() && differentials.size() + 1 != bases.size())
        throw Error(ErrorKind::ShapeMismatch, "differential count");
    for (std::size_t p = 0; p < differentials.size(); ++p) {
        if (differentials[p].cols() != static_cast<int>(bases[p].size()) ||
            differentials[p].rows() != static_cast<int>(bases[p + 1].size()))
            throw Error(ErrorKind::ShapeMismatch, "differential " + std::to_string(p));
    }
}

CohomologyBasis::CohomologyBasis(const CochainComplexQ& c, int degree) : outgoing_(c.differential(degree)) {
    const SparseMatrixQ incoming = c.differential(degree - 1);
    int label = -1;
    for (int col = 0; col < incoming.cols(); ++col) quotient_.insert(incoming.column(col), label--);
    for (auto& z : kernel_basis(outgoing_)) {
        const int idx = static_cast<int>(reps_.size());
        if (quotient_.insert(z, idx)) reps_.push_back(std::move(z));
    }
}

SparseVector CohomologyBasis::coordinates(const SparseVector& z) const {
    if (!outgoing_.apply(z).empty()) throw Error(ErrorKind::InvalidArgument, "not a cocycle");
    SparseVector coeffs;
    if (!quotient_.reduce(z, &coeffs).empty())
        throw Error(ErrorKind::InvalidArgument, "cocycle outside the computed span");
    SparseVector out;
    for (auto& e : coeffs)
        if (e.index >= 0) out.push_back(e);
    return out;
}

}  // namespace clusterhodge
