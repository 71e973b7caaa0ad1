#include "clusterhodge/smith.hpp"

#include <utility>

#include "clusterhodge/error.hpp"

namespace clusterhodge {

IntMatrix identity_matrix(std::size_t n) {
    IntMatrix out(n, std::vector<Integer>(n, 0));
    for (std::size_t i = 0; i < n; ++i) out[i][i] = 1;
    return out;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    if (a.empty()) return {};
    const std::size_t inner = a[0].size();
    if (b.size() != inner) throw Error(ErrorKind::ShapeMismatch, "integer matrix product");
    const std::size_t cols = b.empty() ? 0 : b[0].size();
    IntMatrix out(a.size(), std::vector<Integer>(cols, 0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < inner; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

namespace {

class SmithWorker {
public:
    SmithWorker(const IntMatrix& a, std::size_t rows, std::size_t cols)
        : a_(a), rows_(rows), cols_(cols) {
        f_.u = identity_matrix(rows);
        f_.u_inv = identity_matrix(rows);
        f_.v = identity_matrix(cols);
        f_.v_inv = identity_matrix(cols);
    }

    SmithForm run() {
        const std::size_t steps = std::min(rows_, cols_);
        std::size_t t = 0;
        for (; t < steps; ++t) {
            if (!place_min(t, true)) break;
            while (!settle(t)) {}
            if (a_[t][t] < 0) negate_row(t);
        }
        f_.rank = static_cast<int>(t);
        f_.diagonal.assign(steps, 0);
        for (std::size_t i = 0; i < t; ++i) f_.diagonal[i] = a_[i][i];
        return std::move(f_);
    }

private:
    // Moves the smallest nonzero entry of the trailing block (or of row/column t
    // only) to (t, t). Returns false if that region is zero.
    bool place_min(std::size_t t, bool whole_block) {
        std::size_t bi = rows_, bj = cols_;
        for (std::size_t i = t; i < rows_; ++i)
            for (std::size_t j = t; j < cols_; ++j) {
                if (!whole_block && i != t && j != t) continue;
                if (a_[i][j] == 0) continue;
                if (bi == rows_ || mpz_cmpabs(a_[i][j].get_mpz_t(), a_[bi][bj].get_mpz_t()) < 0) {
                    bi = i;
                    bj = j;
                }
            }
        if (bi == rows_) return false;
        if (bi != t) swap_rows(bi, t);
        if (bj != t) swap_cols(bj, t);
        return true;
    }

    // One elimination round at pivot t; true when row and column t are clear and
    // the pivot divides the remaining block.
    bool settle(std::size_t t) {
        bool clean = true;
        for (std::size_t i = t + 1; i < rows_; ++i) {
            if (a_[i][t] == 0) continue;
            Integer q;
            mpz_tdiv_q(q.get_mpz_t(), a_[i][t].get_mpz_t(), a_[t][t].get_mpz_t());
            add_row(i, t, -q);
            if (a_[i][t] != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < cols_; ++j) {
            if (a_[t][j] == 0) continue;
            Integer q;
            mpz_tdiv_q(q.get_mpz_t(), a_[t][j].get_mpz_t(), a_[t][t].get_mpz_t());
            add_col(j, t, -q);
            if (a_[t][j] != 0) clean = false;
        }
        if (!clean) {
            place_min(t, false);
            return false;
        }
        for (std::size_t i = t + 1; i < rows_; ++i)
            for (std::size_t j = t + 1; j < cols_; ++j)
                if (!mpz_divisible_p(a_[i][j].get_mpz_t(), a_[t][t].get_mpz_t())) {
                    add_row(t, i, 1);
                    return false;
                }
        return true;
    }

    // row i += q * row j
    void add_row(std::size_t i, std::size_t j, const Integer& q) {
        for (std::size_t c = 0; c < cols_; ++c) a_[i][c] += q * a_[j][c];
        for (std::size_t c = 0; c < rows_; ++c) f_.u[i][c] += q * f_.u[j][c];
        for (std::size_t r = 0; r < rows_; ++r) f_.u_inv[r][j] -= q * f_.u_inv[r][i];
    }

    // col i += q * col j
    void add_col(std::size_t i, std::size_t j, const Integer& q) {
        for (std::size_t r = 0; r < rows_; ++r) a_[r][i] += q * a_[r][j];
        for (std::size_t r = 0; r < cols_; ++r) f_.v[r][i] += q * f_.v[r][j];
        for (std::size_t c = 0; c < cols_; ++c) f_.v_inv[j][c] -= q * f_.v_inv[i][c];
    }

    void swap_rows(std::size_t i, std::size_t j) {
        std::swap(a_[i], a_[j]);
        std::swap(f_.u[i], f_.u[j]);
        for (std::size_t r = 0; r < rows_; ++r) std::swap(f_.u_inv[r][i], f_.u_inv[r][j]);
    }

    void swap_cols(std::size_t i, std::size_t j) {
        for (std::size_t r = 0; r < rows_; ++r) std::swap(a_[r][i], a_[r][j]);
        for (std::size_t r = 0; r < cols_; ++r) std::swap(f_.v[r][i], f_.v[r][j]);
        std::swap(f_.v_inv[i], f_.v_inv[j]);
    }

    void negate_row(std::size_t i) {
        for (auto& x : a_[i]) x = -x;
        for (auto& x : f_.u[i]) x = -x;
        for (std::size_t r = 0; r < rows_; ++r) f_.u_inv[r][i] = -f_.u_inv[r][i];
    }

    IntMatrix a_;
    std::size_t rows_, cols_;
    SmithForm f_;
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a, std::size_t rows, std::size_t cols) {
    if (a.size() != rows) throw Error(ErrorKind::ShapeMismatch, "row count");
    for (const auto& r : a)
        if (r.size() != cols) throw Error(ErrorKind::ShapeMismatch, "column count");
    return SmithWorker(a, rows, cols).run();
}

}  // namespace clusterhodge
