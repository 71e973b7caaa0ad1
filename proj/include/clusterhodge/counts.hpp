#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "clusterhodge/exchange.hpp"
#include "clusterhodge/gysin.hpp"
#include "clusterhodge/polynomial.hpp"

namespace clusterhodge {

struct GraphStats {
    int vertices = 0;
    long edges = 0;
    int components = 0;          // l
    int isolated = 0;            // l_1
    std::vector<int> degrees;    // d_i
    std::vector<int> increments; // e_i = #components(G - i) - #components(G); -1 for isolated i
    long triangles = 0;
    long h1 = 0;                 // |E| - |V| + l
};

GraphStats graph_stats(const Graph& g);

struct PointCount {
    IntPolynomial polynomial;
    /// Valid at q = 1 mod 2N; N = 1 for really full rank.
    Integer modulus = 1;
    bool weighted = false;
};

/// sum_I |X*(I)| q^|I| (q - 1)^{n + m - 2|I|}. Throws NotAcyclic, NotFullRank.
PointCount point_count_poly(const ExtendedExchangeMatrix& b);

/// Number of F_q-points of the exchange-relation variety, q prime.
/// Throws TooLarge beyond 1e8 enumerated (x, y) tuples, NotAcyclic.
Integer brute_force_count(const ExtendedExchangeMatrix& b, std::uint64_t q, int jobs = 1);

bool is_prime(std::uint64_t q);
/// Smallest primes q = 1 mod 2N (odd primes when N = 1), ascending.
std::vector<std::uint64_t> admissible_primes(const Integer& modulus, std::size_t count, std::uint64_t start = 3);

/// Lagrange interpolation through (q_i, v_i); throws InvalidArgument if not integral.
IntPolynomial interpolate(const std::vector<std::uint64_t>& qs, const std::vector<Integer>& values);

/// sum_{k,s} (-1)^k dims(k,s) q^{d-s}
IntPolynomial duality_polynomial(const HodgeTable& t);

/// Violations of max(2k/3, 2k-d) <= s <= k and 0 <= k <= d, as "(k,s)" strings.
std::vector<std::string> vanishing_violations(const HodgeTable& t);
/// Pairs where dims(k,s) != dims(k+d-2s, d-s).
std::vector<std::string> lefschetz_violations(const HodgeTable& t);

/// s <= 3 part of the table from graph statistics. Throws NotPrincipal.
HodgeTable closed_form_s_le_3(const ExtendedExchangeMatrix& b_prin);

struct CheckResult {
    std::string name;
    bool passed = false;
    bool skipped = false;
    std::string detail;
};

struct ConsistencyReport {
    std::vector<CheckResult> checks;
    bool passed() const;
};

struct SuiteOptions {
    int jobs = 1;
    std::size_t primes = 3;
    /// Per-prime enumeration budget for the brute-force check.
    double max_tuples = 2e6;
};

ConsistencyReport consistency_suite(const ExtendedExchangeMatrix& b, const SuiteOptions& opt = {});

}  // namespace clusterhodge
