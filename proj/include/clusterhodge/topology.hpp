#pragma once

#include <map>
#include <string>
#include <vector>

#include "clusterhodge/cochain.hpp"
#include "clusterhodge/graph.hpp"

namespace clusterhodge {

/// Faces as vertex masks, sorted by (size, mask). Always contains the empty face.
struct SimplicialComplex {
    Mask vertices = 0;
    std::vector<Mask> faces;
};

SimplicialComplex independence_complex(const Graph& g, Mask within);
inline SimplicialComplex independence_complex(const Graph& g) { return independence_complex(g, g.all()); }

/// Augmented cochain complex: offset -1, the empty face spans degree -1.
/// The coboundary of face I hits I+v with sign (-1)^{#{i in I : i < v}}.
CochainComplexQ augmented_cochains(const SimplicialComplex& k);

struct ReducedCohomology {
    std::map<int, long> dims;  // only nonzero entries
    long at(int r) const;
    bool operator==(const ReducedCohomology& o) const { return dims == o.dims; }
    /// Rendered as "{1: 2}".
    std::string to_string() const;
};

ReducedCohomology reduced_cohomology(const SimplicialComplex& k);

struct HomotopyType {
    enum class Kind { Contractible, Sphere };
    Kind kind = Kind::Contractible;
    int dim = 0;  // meaningful for spheres; the empty complex is Sphere(-1)

    static HomotopyType contractible() { return {Kind::Contractible, 0}; }
    static HomotopyType sphere(int k) { return {Kind::Sphere, k}; }
    HomotopyType join(const HomotopyType& o) const;
    HomotopyType suspension() const { return join(sphere(0)); }
    ReducedCohomology cohomology() const;
    std::string to_string() const;
    bool operator==(const HomotopyType& o) const {
        return kind == o.kind && (kind == Kind::Contractible || dim == o.dim);
    }
};

/// Independence complex of the path with `edges` edges (edges + 1 vertices).
HomotopyType closed_form_path(int edges);
/// Independence complex of the cycle on m vertices.
ReducedCohomology closed_form_cycle(int m);
/// Symbolic homotopy type of the independence complex of a forest.
HomotopyType forest_homotopy(const Graph& forest);

/// Connecting map H~^r(I(X)) -> H~^{r+1}(I(X + a + b)) for an edge (a, b) with a, b outside X,
/// in the bases chosen by CohomologyBasis on augmented_cochains. Keyed by r.
struct MayerVietorisMap {
    std::map<int, SparseMatrixQ> by_degree;
};

MayerVietorisMap mv_delta(const Graph& ambient, Mask x, int a, int b);

/// Cochain-level rule behind mv_delta: a cochain psi on I(X) in degree r goes to eta on
/// I(X + a + b) with eta(I + a) = (-1)^{#{i in I : i > a}} psi(I), zero on faces without a.
SparseVector mv_cochain(const SimplicialComplex& source, const SimplicialComplex& target, int degree,
                        int a, const SparseVector& psi);

}  // namespace clusterhodge
