#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "clusterhodge/cochain.hpp"
#include "clusterhodge/exchange.hpp"
#include "clusterhodge/gysin.hpp"

namespace clusterhodge {

/// [B; Id_n] for the top block of B, and the torus bookkeeping
/// P(B) (1+xy)^a = P(B_prin) (1+xy)^b on two-variable Hodge polynomials.
struct PrincipalNormalization {
    ExtendedExchangeMatrix principal;
    int a = 0;
    int b = 0;
    /// Table of the original matrix from the table of the principal one.
    HodgeTable transfer(const HodgeTable& principal_table) const;
};

/// Throws NotReallyFullRank (or NotFullRank).
PrincipalNormalization principal_normalize(const ExtendedExchangeMatrix& b);

/// Differential never lowers the level.
struct FilteredComplexQ {
    CochainComplexQ complex;
    std::vector<std::vector<int>> level;  // per space, per basis vector
    int min_level() const;
    int max_level() const;
    bool respects_filtration() const;
};

/// G^{*, s}(B_prin) filtered by |A meet [n]| + |I|. Throws NotPrincipal, NotAcyclic.
FilteredComplexQ build_filtered(const ExtendedExchangeMatrix& b_prin, int s);

/// Summand of gr G^{*, s} spanned by theta(E \ I, D, I), I an anticlique inside E \ D.
struct GradedPiece {
    Mask d = 0;
    Mask e = 0;
    int weight = 0;
    CochainComplexQ complex;  // position |I|
};

/// All pieces with |D| + |E| = s, ordered by (|E|, E, D). Throws NotPrincipal.
std::vector<GradedPiece> graded_pieces(const ExtendedExchangeMatrix& b_prin, int s);

using PageKey = std::tuple<int, int, int>;  // (e, f, s)

struct SpectralSequencePage {
    int r = 0;
    std::map<PageKey, long> entries;                 // nonzero only
    std::map<PageKey, SparseMatrixQ> differentials;  // source key -> map to (e + r, f + 1 - r, s); nonzero only
    long at(int e, int f, int s) const;
};

struct SpectralSequence {
    std::vector<SpectralSequencePage> pages;  // r = 1, 2, ...
    int stabilization_page = 1;               // width + 1, always
    int observed_collapse = 1;                // first r with d_r' = 0 for all r' >= r
    const SpectralSequencePage& page(int r) const { return pages.at(static_cast<std::size_t>(r - 1)); }
    const SpectralSequencePage& limit() const { return pages.back(); }
};

/// Pages of the filtration spectral sequence with entries keyed (e, f, weight) where e is
/// the level and e + f the cohomological degree. max_page < 0 computes up to stabilization.
SpectralSequence spectral_sequence(const FilteredComplexQ& fc, int weight, int max_page = -1);

/// Page dimensions after taking cohomology of the page's differentials.
std::map<PageKey, long> next_page_dims(const SpectralSequencePage& page);

/// E_1 assembled from reduced cohomology of independence complexes I(E \ D), with d_1
/// built from mv_delta. Throws NotPrincipal.
SpectralSequencePage e1_page(const ExtendedExchangeMatrix& b_prin, int s);

struct NamedDimension {
    std::string name;
    long computed = 0;
    long expected = 0;
    bool matches() const { return computed == expected; }
};

struct PageReport {
    std::vector<NamedDimension> items;
    bool all_match() const;
};

/// Weight-2 page entries against graph statistics. Throws NotPrincipal.
PageReport e2_report_s2(const ExtendedExchangeMatrix& b_prin);
/// Weight-3 page entries against graph statistics. Throws NotPrincipal.
PageReport e3_report_s3(const ExtendedExchangeMatrix& b_prin);

}  // namespace clusterhodge
