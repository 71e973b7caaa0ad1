#pragma once

#include <map>
#include <string>

#include "clusterhodge/graph.hpp"
#include "clusterhodge/linalg.hpp"

namespace clusterhodge {

/// Sparse element of the exterior algebra on dlog x_0 .. dlog x_{N-1}.
/// A monomial mask lists its factors in increasing index order.
class ExteriorForm {
public:
    ExteriorForm() = default;
    static ExteriorForm monomial(Mask m, const Rational& c = 1);
    /// sum_r coeffs[r] dlog x_r
    static ExteriorForm one_form(const SparseVector& coeffs);

    const std::map<Mask, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(Mask m) const;

    void add_term(Mask m, const Rational& c);
    ExteriorForm operator+(const ExteriorForm& o) const;
    ExteriorForm operator-(const ExteriorForm& o) const;
    ExteriorForm operator*(const Rational& c) const;
    ExteriorForm wedge(const ExteriorForm& o) const;
    /// Interior product with the dual of dlog x_j.
    ExteriorForm contract(int j) const;

    bool operator==(const ExteriorForm& o) const { return terms_ == o.terms_; }
    std::string to_string() const;

private:
    std::map<Mask, Rational> terms_;
};

/// Sign of (monomial a) wedge (monomial b) after sorting; 0 if they share a factor.
int wedge_sign(Mask a, Mask b);

}  // namespace clusterhodge
