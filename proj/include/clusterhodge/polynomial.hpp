#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "clusterhodge/linalg.hpp"

namespace clusterhodge {

/// Integer polynomial, coefficients low degree first, no trailing zeros.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Integer> coeffs);
    static IntPolynomial constant(const Integer& c);
    static IntPolynomial monomial(int degree, const Integer& c = 1);

    const std::vector<Integer>& coefficients() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    Integer coefficient(int k) const;
    Integer operator()(const Integer& x) const;

    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator-(const IntPolynomial& o) const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    IntPolynomial pow(int e) const;
    bool operator==(const IntPolynomial& o) const { return c_ == o.c_; }

    /// Rendered as "q^2 - q + 1".
    std::string to_string(const std::string& var = "q") const;

private:
    void trim();
    std::vector<Integer> c_;
};

/// Polynomial in x, y with integer coefficients keyed by (deg_x, deg_y).
class BivariatePoly {
public:
    std::map<std::pair<int, int>, Integer> terms;

    void add(int i, int j, const Integer& c);
    Integer coefficient(int i, int j) const;
    BivariatePoly operator*(const BivariatePoly& o) const;
    bool operator==(const BivariatePoly& o) const { return terms == o.terms; }
    /// Multiply or exactly divide by (1 + xy)^e; division throws InvalidArgument if inexact.
    BivariatePoly times_one_plus_xy(int e) const;
    BivariatePoly divided_by_one_plus_xy(int e) const;
    std::string to_string() const;
};

}  // namespace clusterhodge
