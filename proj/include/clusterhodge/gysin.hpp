#pragma once

#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

#include "clusterhodge/cochain.hpp"
#include "clusterhodge/exchange.hpp"
#include "clusterhodge/exterior.hpp"
#include "clusterhodge/polynomial.hpp"

namespace clusterhodge {

/// alpha_j = sum_r B_{rj} dlog x_r.
ExteriorForm alpha(const ExtendedExchangeMatrix& b, int j);

/// Rows N(I) with B_{N(I), I} invertible, frozen rows preferred so that the number of
/// mutable rows is minimal. Throws ColumnsDependent, NotAnticlique.
Mask choose_N(const ExtendedExchangeMatrix& b, Mask anticlique);

/// Basis theta(A, I) of G^I: A runs over subsets of the complement of I and N(I).
struct GModuleBasis {
    Mask anticlique = 0;
    Mask rows_n = 0;
    Mask available = 0;
    std::vector<Mask> basis_index;  // grouped by degree |A| + |I|, then by mask

    int degree(std::size_t idx) const { return popcount(basis_index[idx]) + popcount(anticlique); }
    /// theta(A, I) expanded in the exterior algebra.
    ExteriorForm expansion(const ExtendedExchangeMatrix& b, std::size_t idx) const;
};

GModuleBasis basis_G_I(const ExtendedExchangeMatrix& b, Mask anticlique);

/// theta(A, I) for an arbitrary A disjoint from I.
ExteriorForm theta(const ExtendedExchangeMatrix& b, Mask a, Mask anticlique);

/// Precomputed row choices and change-of-basis data for every anticlique of a full-rank
/// matrix. Immutable after construction; safe to share between threads.
class GysinData {
public:
    /// Throws NotFullRank.
    explicit GysinData(const ExtendedExchangeMatrix& b);

    const ExtendedExchangeMatrix& matrix() const { return b_; }
    const Graph& graph() const { return graph_; }
    /// Anticliques sorted by (size, mask).
    const std::vector<Mask>& anticliques() const { return anticliques_; }
    int max_anticlique_size() const { return max_size_; }
    Mask rows_n(Mask anticlique) const { return site(anticlique).rows_n; }
    Mask available(Mask anticlique) const { return site(anticlique).available; }

    /// theta(A, J) written in the basis theta(T, J), T inside available(J). Keys are T.
    std::map<Mask, Rational> express(Mask a, Mask anticlique) const;

    /// Degree-s part of rho from G^I to G^{I+j}, in the bases basis_G_I restricted to degree s.
    SparseMatrixQ rho(Mask anticlique, int j, int s) const;

    /// G^{*, s}; only anticliques containing `containing` contribute (a subcomplex).
    CochainComplexQ complex(int s, Mask containing = 0) const;

private:
    struct Site {
        Mask rows_n = 0;
        Mask available = 0;
        // dlog x_r for r in N(J) equals sum over available rows modulo alpha_J.
        std::map<int, SparseVector> substitution;
    };
    const Site& site(Mask anticlique) const;

    ExtendedExchangeMatrix b_;
    Graph graph_;
    std::vector<Mask> anticliques_;
    int max_size_ = 0;
    std::unordered_map<Mask, Site> sites_;
};

/// Subsets of `pool` of size k in increasing mask order.
std::vector<Mask> subsets_of_size(Mask pool, int k);

/// G^{*, s}(B) for acyclic, really full rank B. Throws NotAcyclic, NotReallyFullRank.
CochainComplexQ build_gysin_complex(const ExtendedExchangeMatrix& b, int s);

/// Complex of one character: zero, or G^{*, s - shift}(reduced) to be read at
/// (k, s) = (r + s, s) with r = position + shift.
struct CharacterComplex {
    CharacterReduction reduction;
    CochainComplexQ complex;  // empty when reduction.zero
    int weight = 0;           // s in the ambient table
};

/// Throws NotFullRank.
CharacterComplex build_character_complex(const ExtendedExchangeMatrix& b, const Character& chi, int s);

/// dims(k, s) of H^{k,(s,s)}; d = n + m.
class HodgeTable {
public:
    HodgeTable() = default;
    HodgeTable(int n, int m) : n_(n), m_(m) {}

    int n() const { return n_; }
    int m() const { return m_; }
    int d() const { return n_ + m_; }
    long at(int k, int s) const;
    void add(int k, int s, long v);
    const std::map<std::pair<int, int>, long>& entries() const { return dims_; }

    /// sum dims(k, s) x^k y^s
    BivariatePoly polynomial() const;
    static HodgeTable from_polynomial(int n, int m, const BivariatePoly& p);
    /// sum_s dims(s + offset, s) x^s
    IntPolynomial diagonal(int offset) const;

    bool operator==(const HodgeTable& o) const { return n_ == o.n_ && m_ == o.m_ && dims_ == o.dims_; }

private:
    int n_ = 0;
    int m_ = 0;
    std::map<std::pair<int, int>, long> dims_;  // nonzero only
};

struct HodgeOptions {
    int jobs = 1;
};

/// Table from G^{*, s}(B) over all s, without characters.
HodgeTable trivial_character_table(const GysinData& g, const HodgeOptions& opt = {});

/// Full table, summed over characters. Throws NotAcyclic, NotFullRank.
HodgeTable hodge_table(const ExtendedExchangeMatrix& b, const HodgeOptions& opt = {});

/// Number of pairs (j, K) with j + |K| <= n in degree 2j + |K|. Throws NotPrincipal, NotConnected.
IntPolynomial standard_poincare(const ExtendedExchangeMatrix& b);

/// sum_{i<j} Bhat_{ij} dlog x_i dlog x_j over the component and all frozen rows, with Bhat the
/// skew completion that is zero on frozen pairs.
ExteriorForm gsv_form(const ExtendedExchangeMatrix& b, Mask component);

/// theta({a}, {b}) as a vector in position 1 of G^{*, 2}. Throws NotAnEdge.
SparseVector edge_class_cochain(const GysinData& g, int a, int b);

}  // namespace clusterhodge
