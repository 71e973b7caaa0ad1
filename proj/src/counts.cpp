#include "clusterhodge/counts.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "clusterhodge/error.hpp"
#include "clusterhodge/filtration.hpp"
#include "clusterhodge/kernels.hpp"

namespace clusterhodge {

GraphStats graph_stats(const Graph& g) {
    GraphStats st;
    st.vertices = g.vertex_count();
    st.edges = static_cast<long>(g.edge_count());
    st.components = static_cast<int>(g.components().size());
    for (int v = 0; v < st.vertices; ++v) {
        const int deg = g.degree(v);
        st.degrees.push_back(deg);
        if (deg == 0) ++st.isolated;
        const int without = static_cast<int>(g.components(g.all() & ~bit(v)).size());
        st.increments.push_back(without - st.components);
    }
    for (const auto& [u, w] : g.edges())
        st.triangles += popcount(g.neighbors(u) & g.neighbors(w) & ~low_bits(w + 1));
    st.h1 = st.edges - st.vertices + st.components;
    return st;
}

PointCount point_count_poly(const ExtendedExchangeMatrix& b) {
    if (!is_acyclic(b)) throw Error(ErrorKind::NotAcyclic, "quiver has an oriented cycle");
    if (rank_class(b) == RankClass::NotFullRank) throw Error(ErrorKind::NotFullRank, "B is not of full rank");
    const int d = b.row_count();
    const Graph g = underlying_graph(b);
    PointCount pc;
    const IntPolynomial q = IntPolynomial::monomial(1, 1);
    const IntPolynomial q_minus_1 = q - IntPolynomial::constant(1);
    for (Mask i : anticliques(g).all()) {
        const int k = popcount(i);
        const FiniteAbelianGroup x = torsion_of_cokernel(b.columns(i), static_cast<std::size_t>(d),
                                                         static_cast<std::size_t>(k));
        const Integer order = x.order();
        if (order != 1) pc.weighted = true;
        pc.modulus = lcm(pc.modulus, x.exponent());
        pc.polynomial = pc.polynomial + IntPolynomial::constant(order) * q.pow(k) * q_minus_1.pow(d - 2 * k);
    }
    return pc;
}

Integer brute_force_count(const ExtendedExchangeMatrix& b, std::uint64_t q, int jobs) {
    return jobs > 1 ? kernels::count_points_parallel(b, q, jobs) : kernels::count_points_serial(b, q);
}

bool is_prime(std::uint64_t q) {
    if (q < 2) return false;
    for (std::uint64_t f = 2; f * f <= q; ++f)
        if (q % f == 0) return false;
    return true;
}

std::vector<std::uint64_t> admissible_primes(const Integer& modulus, std::size_t count, std::uint64_t start) {
    if (modulus <= 0) throw Error(ErrorKind::InvalidArgument, "modulus must be positive");
    if (!modulus.fits_ulong_p()) throw Error(ErrorKind::TooLarge, "modulus too large");
    const std::uint64_t step = 2 * modulus.get_ui();
    std::vector<std::uint64_t> out;
    std::uint64_t q = start <= 1 ? 1 + step : start + (step - (start - 1) % step) % step;
    for (; out.size() < count; q += step) {
        if (q > (std::uint64_t{1} << 31)) throw Error(ErrorKind::TooLarge, "no admissible prime below 2^31");
        if (is_prime(q)) out.push_back(q);
    }
    return out;
}

IntPolynomial interpolate(const std::vector<std::uint64_t>& qs, const std::vector<Integer>& values) {
    if (qs.size() != values.size()) throw Error(ErrorKind::ShapeMismatch, "points and values differ in length");
    const std::size_t k = qs.size();
    std::vector<Rational> acc(k, 0);
    for (std::size_t i = 0; i < k; ++i) {
        // basis numerator prod_{j != i} (q - q_j), low-first
        std::vector<Rational> basis{1};
        Rational denom = 1;
        for (std::size_t j = 0; j < k; ++j) {
            if (j == i) continue;
            if (qs[j] == qs[i]) throw Error(ErrorKind::InvalidArgument, "repeated interpolation point");
            const Rational qj = static_cast<unsigned long>(qs[j]);
            std::vector<Rational> next(basis.size() + 1, 0);
            for (std::size_t t = 0; t < basis.size(); ++t) {
                next[t + 1] += basis[t];
                next[t] -= qj * basis[t];
            }
            basis = std::move(next);
            denom *= Rational(static_cast<unsigned long>(qs[i])) - qj;
        }
        const Rational scale = Rational(values[i]) / denom;
        for (std::size_t t = 0; t < basis.size(); ++t) acc[t] += scale * basis[t];
    }
    std::vector<Integer> coeffs;
    for (auto& c : acc) {
        c.canonicalize();
        if (c.get_den() != 1) throw Error(ErrorKind::InvalidArgument, "interpolant is not integral");
        coeffs.push_back(c.get_num());
    }
    return IntPolynomial(coeffs);
}

IntPolynomial duality_polynomial(const HodgeTable& t) {
    IntPolynomial out;
    for (const auto& [key, dim] : t.entries()) {
        const auto [k, s] = key;
        const Integer c = (k % 2 == 0 ? 1 : -1) * Integer(dim);
        out = out + IntPolynomial::monomial(t.d() - s, c);
    }
    return out;
}

std::vector<std::string> vanishing_violations(const HodgeTable& t) {
    std::vector<std::string> out;
    const int d = t.d();
    for (const auto& [key, dim] : t.entries()) {
        const auto [k, s] = key;
        const bool ok = k >= 0 && k <= d && 3 * s >= 2 * k && s >= 2 * k - d && s <= k;
        if (!ok) out.push_back("(" + std::to_string(k) + "," + std::to_string(s) + ")");
    }
    return out;
}

std::vector<std::string> lefschetz_violations(const HodgeTable& t) {
    std::vector<std::string> out;
    const int d = t.d();
    for (const auto& [key, dim] : t.entries()) {
        const auto [k, s] = key;
        if (t.at(k + d - 2 * s, d - s) != dim) out.push_back("(" + std::to_string(k) + "," + std::to_string(s) + ")");
    }
    return out;
}

namespace {

long choose(long n, long k) {
    if (k < 0 || n < k) return 0;
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

HodgeTable closed_form_s_le_3(const ExtendedExchangeMatrix& b_prin) {
    if (!b_prin.is_principal()) throw Error(ErrorKind::NotPrincipal, "expected principal coefficients");
    const GraphStats st = graph_stats(underlying_graph(b_prin));
    const long n = b_prin.n();
    const long l = st.components;
    long sum_e = 0, sum_pairs = 0, sum_h1_minus = 0;
    for (int i = 0; i < st.vertices; ++i) {
        const long d = st.degrees[static_cast<std::size_t>(i)];
        const long e = st.increments[static_cast<std::size_t>(i)];
        sum_e += e;
        sum_pairs += choose(d, 2);
        sum_h1_minus += d - e - 1;
    }
    HodgeTable t(b_prin.n(), b_prin.m());
    t.add(0, 0, 1);
    t.add(1, 1, n);
    t.add(2, 2, choose(n, 2) + l);
    t.add(3, 2, st.h1);
    t.add(3, 3, choose(n, 3) + n * l - st.isolated);
    t.add(4, 3, (n * st.h1 - sum_h1_minus) + (sum_pairs - st.triangles - sum_e - st.isolated));
    return t;
}

bool ConsistencyReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed || c.skipped; });
}

namespace {

std::string join(const std::vector<std::string>& v) {
    std::string out;
    for (const auto& s : v) out += (out.empty() ? "" : " ") + s;
    return out;
}

CheckResult skipped(std::string name, std::string why) { return {std::move(name), false, true, std::move(why)}; }

}  // namespace

ConsistencyReport consistency_suite(const ExtendedExchangeMatrix& b, const SuiteOptions& opt) {
    ConsistencyReport rep;
    const HodgeTable table = hodge_table(b, HodgeOptions{opt.jobs});
    const PointCount pc = point_count_poly(b);
    const bool really_full = rank_class(b) == RankClass::ReallyFullRank;

    {
        const IntPolynomial dual = duality_polynomial(table);
        rep.checks.push_back({"duality", dual == pc.polynomial,
                              false, "table: " + dual.to_string() + " | count: " + pc.polynomial.to_string()});
    }
    if (really_full) {
        const auto v = vanishing_violations(table);
        rep.checks.push_back({"vanishing", v.empty(), false, v.empty() ? "ok" : join(v)});
    } else {
        rep.checks.push_back(skipped("vanishing", "only asserted for really full rank"));
    }
    {
        const auto v = lefschetz_violations(table);
        rep.checks.push_back({"lefschetz", v.empty(), false, v.empty() ? "ok" : join(v)});
    }
    if (really_full) {
        const PrincipalNormalization pn = principal_normalize(b);
        const HodgeTable prin = hodge_table(pn.principal, HodgeOptions{opt.jobs});
        const HodgeTable closed = closed_form_s_le_3(pn.principal);
        std::vector<std::string> bad;
        for (int s = 0; s <= 3; ++s)
            for (int k = 0; k <= 2 * pn.principal.row_count(); ++k)
                if (prin.at(k, s) != closed.at(k, s))
                    bad.push_back("(" + std::to_string(k) + "," + std::to_string(s) + ")");
        const bool transfer_ok = pn.transfer(prin) == table;
        std::string detail = bad.empty() ? "s<=3 ok" : "s<=3 mismatch " + join(bad);
        detail += transfer_ok ? "; transfer ok" : "; transfer mismatch";
        rep.checks.push_back({"closed-forms", bad.empty() && transfer_ok, false, detail});
    } else {
        rep.checks.push_back(skipped("closed-forms", "principal transfer needs really full rank"));
    }
    {
        const auto primes = admissible_primes(pc.modulus, opt.primes);
        std::vector<std::string> notes;
        bool ok = true;
        bool any = false;
        for (std::uint64_t q : primes) {
            if (kernels::enumeration_size(b, q) > Integer(opt.max_tuples)) break;
            any = true;
            const Integer counted = brute_force_count(b, q, opt.jobs);
            const Integer predicted = pc.polynomial(Integer(static_cast<unsigned long>(q)));
            if (counted != predicted) ok = false;
            notes.push_back("q=" + std::to_string(q) + ":" + counted.get_str() + (counted == predicted ? "" : "!=" + predicted.get_str()));
        }
        if (any) rep.checks.push_back({"brute-force", ok, false, join(notes)});
        else rep.checks.push_back(skipped("brute-force", "enumeration budget exceeded"));
    }
    return rep;
}

}  // namespace clusterhodge
