#include "clusterhodge/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdlib>

#include "clusterhodge/error.hpp"
#include "clusterhodge/gysin.hpp"

namespace clusterhodge::kernels {

std::vector<std::map<int, long>> slice_cohomology_serial(const GysinData& g) {
    const int d = g.matrix().row_count();
    std::vector<std::map<int, long>> out(static_cast<std::size_t>(d + 1));
    for (int s = 0; s <= d; ++s) out[static_cast<std::size_t>(s)] = g.complex(s).cohomology_dims();
    return out;
}

std::vector<std::map<int, long>> slice_cohomology_parallel(const GysinData& g, int jobs) {
    const int d = g.matrix().row_count();
    std::vector<std::map<int, long>> out(static_cast<std::size_t>(d + 1));
    // Middle weights are the most expensive; hand them out first.
    std::vector<int> order;
    for (int s = 0; s <= d; ++s) order.push_back(s);
    std::stable_sort(order.begin(), order.end(),
                     [d](int a, int b) { return std::abs(2 * a - d) < std::abs(2 * b - d); });
    const int count = static_cast<int>(order.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs)
    for (int idx = 0; idx < count; ++idx) {
        const int s = order[static_cast<std::size_t>(idx)];
        out[static_cast<std::size_t>(s)] = g.complex(s).cohomology_dims();
    }
    return out;
}

namespace {

struct Counter {
    const ExtendedExchangeMatrix& b;
    std::uint64_t q;
    int vars;  // n + m
    // Per column: (row, exponent) for the positive and the negative monomial.
    std::vector<std::vector<std::pair<int, std::int64_t>>> plus, minus;

    Counter(const ExtendedExchangeMatrix& bb, std::uint64_t qq) : b(bb), q(qq), vars(bb.row_count()) {
        if (q < 2 || q > (std::uint64_t{1} << 31)) throw Error(ErrorKind::InvalidArgument, "q out of range");
        for (std::uint64_t f = 2; f * f <= q; ++f)
            if (q % f == 0) throw Error(ErrorKind::InvalidArgument, "q must be prime");
        if (!is_acyclic(b)) throw Error(ErrorKind::NotAcyclic, "quiver has an oriented cycle");
        plus.resize(static_cast<std::size_t>(b.n()));
        minus.resize(static_cast<std::size_t>(b.n()));
        for (int j = 0; j < b.n(); ++j)
            for (int r = 0; r < vars; ++r) {
                const std::int64_t e = b(r, j);
                if (e > 0) plus[static_cast<std::size_t>(j)].emplace_back(r, e);
                if (e < 0) minus[static_cast<std::size_t>(j)].emplace_back(r, -e);
            }
    }

    std::uint64_t power(std::uint64_t x, std::int64_t e) const {
        std::uint64_t r = 1 % q;
        x %= q;
        while (e > 0) {
            if (e & 1) r = r * x % q;
            x = x * x % q;
            e >>= 1;
        }
        return r;
    }

    std::uint64_t monomial(const std::vector<std::pair<int, std::int64_t>>& t, const std::vector<std::uint64_t>& v) const {
        std::uint64_t r = 1 % q;
        for (const auto& [row, e] : t) r = r * power(v[static_cast<std::size_t>(row)], e) % q;
        return r;
    }

    // Fibre size over (x, y): one x' per nonzero x_j, q choices per x_j = 0 with zero right side.
    Integer fibre(const std::vector<std::uint64_t>& v) const {
        Integer total = 1;
        for (int j = 0; j < b.n(); ++j) {
            if (v[static_cast<std::size_t>(j)] != 0) continue;
            const std::uint64_t rhs = (monomial(plus[static_cast<std::size_t>(j)], v) +
                                       monomial(minus[static_cast<std::size_t>(j)], v)) % q;
            if (rhs != 0) return 0;
            total *= static_cast<unsigned long>(q);
        }
        return total;
    }

    // Odometer over coordinates 1..vars-1 with coordinate 0 fixed to `lead`.
    Integer sweep(std::uint64_t lead) const {
        std::vector<std::uint64_t> v(static_cast<std::size_t>(vars));
        auto lowest = [&](int i) -> std::uint64_t { return i < b.n() ? 0 : 1; };
        for (int i = 0; i < vars; ++i) v[static_cast<std::size_t>(i)] = lowest(i);
        v[0] = lead;
        Integer total = 0;
        for (;;) {
            total += fibre(v);
            int i = 1;
            while (i < vars) {
                if (++v[static_cast<std::size_t>(i)] < q) break;
                v[static_cast<std::size_t>(i)] = lowest(i);
                ++i;
            }
            if (i >= vars) return total;
        }
    }

    std::uint64_t lead_start() const { return b.n() > 0 ? 0 : 1; }
};

void guard(const ExtendedExchangeMatrix& b, std::uint64_t q) {
    if (enumeration_size(b, q) > 100000000)
        throw Error(ErrorKind::TooLarge, "enumeration exceeds 1e8 tuples");
}

}  // namespace

Integer enumeration_size(const ExtendedExchangeMatrix& b, std::uint64_t q) {
    Integer size = 1;
    for (int i = 0; i < b.n(); ++i) size *= static_cast<unsigned long>(q);
    for (int i = 0; i < b.m(); ++i) size *= static_cast<unsigned long>(q - 1);
    return size;
}

Integer count_points_serial(const ExtendedExchangeMatrix& b, std::uint64_t q) {
    Counter c(b, q);
    guard(b, q);
    if (c.vars == 0) return 1;
    Integer total = 0;
    for (std::uint64_t lead = c.lead_start(); lead < q; ++lead) total += c.sweep(lead);
    return total;
}

Integer count_points_parallel(const ExtendedExchangeMatrix& b, std::uint64_t q, int jobs) {
    Counter c(b, q);
    guard(b, q);
    if (c.vars == 0) return 1;
    const auto start = static_cast<long>(c.lead_start());
    const auto stop = static_cast<long>(q);
    std::vector<Integer> partial(static_cast<std::size_t>(stop), 0);
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs)
    for (long lead = start; lead < stop; ++lead)
        partial[static_cast<std::size_t>(lead)] = c.sweep(static_cast<std::uint64_t>(lead));
    Integer total = 0;
    for (const auto& p : partial) total += p;
    return total;
}

}  // namespace clusterhodge::kernels
