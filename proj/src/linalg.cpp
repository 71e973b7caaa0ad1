#include "clusterhodge/linalg.hpp"

#include <algorithm>
#include <utility>

#include "clusterhodge/error.hpp"

namespace clusterhodge {

SparseVector add_scaled(const SparseVector& a, const Rational& c, const SparseVector& b) {
    if (c == 0) return a;
    SparseVector out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].index < b[j].index)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].index < a[i].index) {
            out.push_back({b[j].index, c * b[j].value});
            ++j;
        } else {
            Rational v = a[i].value + c * b[j].value;
            if (v != 0) out.push_back({a[i].index, std::move(v)});
            ++i;
            ++j;
        }
    }
    return out;
}

SparseVector scaled(const SparseVector& a, const Rational& c) {
    if (c == 0) return {};
    SparseVector out = a;
    for (auto& e : out) e.value *= c;
    return out;
}

SparseVector from_map(const std::map<int, Rational>& m) {
    SparseVector out;
    for (const auto& [k, v] : m)
        if (v != 0) out.push_back({k, v});
    return out;
}

Rational entry(const SparseVector& v, int index) {
    auto it = std::lower_bound(v.begin(), v.end(), index,
                               [](const SparseEntry& e, int i) { return e.index < i; });
    if (it != v.end() && it->index == index) return it->value;
    return 0;
}

SparseMatrixQ::SparseMatrixQ(int rows, int cols)
    : rows_(rows), cols_(cols), columns_(static_cast<std::size_t>(cols)) {}

void SparseMatrixQ::set_column(int c, SparseVector v) {
    for (const auto& e : v)
        if (e.index < 0 || e.index >= rows_) throw Error(ErrorKind::IndexOutOfRange, "row index");
    columns_[static_cast<std::size_t>(c)] = std::move(v);
}

void SparseMatrixQ::add(int r, int c, const Rational& v) {
    if (v == 0) return;
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw Error(ErrorKind::IndexOutOfRange, "matrix entry");
    columns_[static_cast<std::size_t>(c)] =
        add_scaled(columns_[static_cast<std::size_t>(c)], 1, SparseVector{{r, v}});
}

Rational SparseMatrixQ::at(int r, int c) const { return entry(column(c), r); }

SparseVector SparseMatrixQ::apply(const SparseVector& x) const {
    std::map<int, Rational> acc;
    for (const auto& xe : x)
        for (const auto& e : column(xe.index)) acc[e.index] += xe.value * e.value;
    return from_map(acc);
}

SparseMatrixQ SparseMatrixQ::operator*(const SparseMatrixQ& rhs) const {
    if (cols_ != rhs.rows_) throw Error(ErrorKind::ShapeMismatch, "matrix product");
    SparseMatrixQ out(rows_, rhs.cols_);
    for (int c = 0; c < rhs.cols_; ++c) out.columns_[static_cast<std::size_t>(c)] = apply(rhs.column(c));
    return out;
}

SparseMatrixQ SparseMatrixQ::transpose() const {
    SparseMatrixQ out(cols_, rows_);
    for (int c = 0; c < cols_; ++c)
        for (const auto& e : column(c)) out.columns_[static_cast<std::size_t>(e.index)].push_back({c, e.value});
    return out;
}

bool SparseMatrixQ::is_zero() const {
    return std::all_of(columns_.begin(), columns_.end(), [](const SparseVector& v) { return v.empty(); });
}

std::size_t SparseMatrixQ::nonzeros() const {
    std::size_t n = 0;
    for (const auto& c : columns_) n += c.size();
    return n;
}

bool SparseMatrixQ::operator==(const SparseMatrixQ& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && columns_ == o.columns_;
}

SparseMatrixQ SparseMatrixQ::from_dense(const std::vector<std::vector<Rational>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    SparseMatrixQ out(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != c)
            throw Error(ErrorKind::ShapeMismatch, "ragged dense matrix");
        for (int j = 0; j < c; ++j)
            if (rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != 0)
                out.columns_[static_cast<std::size_t>(j)].push_back(
                    {i, rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]});
    }
    return out;
}

std::vector<std::vector<Rational>> SparseMatrixQ::to_dense() const {
    std::vector<std::vector<Rational>> out(static_cast<std::size_t>(rows_),
                                           std::vector<Rational>(static_cast<std::size_t>(cols_)));
    for (int c = 0; c < cols_; ++c)
        for (const auto& e : column(c))
            out[static_cast<std::size_t>(e.index)][static_cast<std::size_t>(c)] = e.value;
    return out;
}

namespace {

struct IntEntry {
    int index;
    Integer value;
};
using IntRow = std::vector<IntEntry>;

void divide_content(IntRow& row) {
    Integer g = 0;
    for (const auto& e : row) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.value.get_mpz_t());
        if (g == 1) return;
    }
    if (g > 1)
        for (auto& e : row) mpz_divexact(e.value.get_mpz_t(), e.value.get_mpz_t(), g.get_mpz_t());
}

IntRow to_integer_row(const SparseVector& v) {
    Integer l = 1;
    for (const auto& e : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.value.get_den_mpz_t());
    IntRow row;
    row.reserve(v.size());
    for (const auto& e : v) {
        Integer x = e.value.get_num() * (l / e.value.get_den());
        row.push_back({e.index, std::move(x)});
    }
    divide_content(row);
    return row;
}

// a*x - b*y
IntRow combine(const Integer& a, const IntRow& x, const Integer& b, const IntRow& y) {
    IntRow out;
    out.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].index < y[j].index)) {
            out.push_back({x[i].index, a * x[i].value});
            ++i;
        } else if (i == x.size() || y[j].index < x[i].index) {
            out.push_back({y[j].index, -b * y[j].value});
            ++j;
        } else {
            Integer v = a * x[i].value - b * y[j].value;
            if (v != 0) out.push_back({x[i].index, std::move(v)});
            ++i;
            ++j;
        }
    }
    return out;
}

const IntEntry* find(const IntRow& row, int index) {
    auto it = std::lower_bound(row.begin(), row.end(), index,
                               [](const IntEntry& e, int i) { return e.index < i; });
    return (it != row.end() && it->index == index) ? &*it : nullptr;
}

}  // namespace

std::size_t rank(const SparseMatrixQ& m) {
    std::vector<IntRow> active;
    active.reserve(static_cast<std::size_t>(m.cols()));
    for (int c = 0; c < m.cols(); ++c)
        if (!m.column(c).empty()) active.push_back(to_integer_row(m.column(c)));

    std::size_t r = 0;
    while (!active.empty()) {
        // Pivot row: fewest entries; pivot entry: smallest magnitude in that row.
        std::size_t best = 0;
        for (std::size_t i = 1; i < active.size(); ++i)
            if (active[i].size() < active[best].size()) best = i;
        std::swap(active[best], active.back());
        IntRow pivot = std::move(active.back());
        active.pop_back();

        std::size_t pe = 0;
        for (std::size_t k = 1; k < pivot.size(); ++k)
            if (mpz_cmpabs(pivot[k].value.get_mpz_t(), pivot[pe].value.get_mpz_t()) < 0) pe = k;
        const int col = pivot[pe].index;
        const Integer p = pivot[pe].value;
        ++r;

        std::vector<IntRow> next;
        next.reserve(active.size());
        for (auto& row : active) {
            const IntEntry* hit = find(row, col);
            if (hit == nullptr) {
                next.push_back(std::move(row));
                continue;
            }
            Integer g;
            mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), hit->value.get_mpz_t());
            Integer a = p / g;
            Integer b = hit->value / g;
            IntRow reduced = combine(a, row, b, pivot);
            if (reduced.empty()) continue;
            divide_content(reduced);
            next.push_back(std::move(reduced));
        }
        active = std::move(next);
    }
    return r;
}

std::size_t rank_rational(const SparseMatrixQ& m) {
    EchelonBasis basis;
    for (int c = 0; c < m.cols(); ++c) basis.insert(m.column(c));
    return basis.dimension();
}

SparseVector EchelonBasis::reduce(const SparseVector& v, SparseVector* coeffs) const {
    std::map<int, Rational> work;
    for (const auto& e : v) work.emplace(e.index, e.value);
    std::map<int, Rational> combo;
    auto it = work.begin();
    while (it != work.end()) {
        const int idx = it->first;
        auto p = pivot_row_.find(idx);
        if (p == pivot_row_.end()) {
            ++it;
            continue;
        }
        const Rational c = it->second;
        for (const auto& e : rows_[p->second]) {
            Rational& w = work[e.index];
            w -= c * e.value;
            if (w == 0) work.erase(e.index);
        }
        if (coeffs != nullptr && track_)
            for (const auto& e : combos_[p->second]) {
                Rational& w = combo[e.index];
                w += c * e.value;
                if (w == 0) combo.erase(e.index);
            }
        it = work.upper_bound(idx);
    }
    if (coeffs != nullptr) *coeffs = from_map(combo);
    return from_map(work);
}

bool EchelonBasis::insert(const SparseVector& v, int label) {
    SparseVector coeffs;
    SparseVector residue = reduce(v, track_ ? &coeffs : nullptr);
    if (residue.empty()) return false;
    const Rational lead = residue.front().value;
    const Rational inv = 1 / lead;
    residue = scaled(residue, inv);
    if (track_) {
        SparseVector combo = add_scaled(SparseVector{{label, 1}}, -1, coeffs);
        combos_.push_back(scaled(combo, inv));
    }
    pivot_row_[residue.front().index] = rows_.size();
    rows_.push_back(std::move(residue));
    return true;
}

std::vector<int> EchelonBasis::pivots() const {
    std::vector<int> out;
    for (const auto& row : rows_) out.push_back(row.front().index);
    return out;
}

std::vector<SparseVector> kernel_basis(const SparseMatrixQ& m) {
    EchelonBasis basis(true);
    std::vector<SparseVector> out;
    for (int c = 0; c < m.cols(); ++c) {
        SparseVector coeffs;
        SparseVector residue = basis.reduce(m.column(c), &coeffs);
        if (residue.empty()) {
            out.push_back(add_scaled(SparseVector{{c, 1}}, -1, coeffs));
        } else {
            basis.insert(m.column(c), c);
        }
    }
    return out;
}

std::optional<SparseVector> solve(const SparseMatrixQ& m, const SparseVector& b) {
    EchelonBasis basis(true);
    for (int c = 0; c < m.cols(); ++c) basis.insert(m.column(c), c);
    SparseVector coeffs;
    if (!basis.reduce(b, &coeffs).empty()) return std::nullopt;
    return coeffs;
}

std::vector<std::vector<Rational>> inverse(const std::vector<std::vector<Rational>>& a) {
    const std::size_t n = a.size();
    std::vector<std::vector<Rational>> w(n, std::vector<Rational>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != n) throw Error(ErrorKind::ShapeMismatch, "inverse of non-square matrix");
        for (std::size_t j = 0; j < n; ++j) w[i][j] = a[i][j];
        w[i][n + i] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && w[p][c] == 0) ++p;
        if (p == n) throw Error(ErrorKind::InvalidArgument, "singular matrix");
        std::swap(w[p], w[c]);
        const Rational inv = 1 / w[c][c];
        for (auto& x : w[c]) x *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || w[r][c] == 0) continue;
            const Rational f = w[r][c];
            for (std::size_t j = 0; j < 2 * n; ++j) w[r][j] -= f * w[c][j];
        }
    }
    std::vector<std::vector<Rational>> out(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out[i][j] = w[i][n + j];
    return out;
}

}  // namespace clusterhodge
