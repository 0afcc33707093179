#pragma once

#include <map>
#include <vector>

#include "hdform/matrix.hpp"

namespace hdform {

/// Sorted (ascending) list of d basis indices in 1..n.
using MultiIndex = std::vector<int>;

/// Exponent vector of length n with entries summing to the degree.
using ExponentVec = std::vector<int>;

/// Symmetric d-linear form on an n-dimensional space, stored sparsely: one
/// tensor entry per sorted multi-index, zeros omitted.
class SymmetricForm {
public:
    SymmetricForm(int dim, int degree);

    int dim() const { return dim_; }
    int degree() const { return degree_; }
    const std::map<MultiIndex, Rational>& entries() const { return entries_; }

    /// Value on basis vectors; idx need not be sorted.
    Rational entry(MultiIndex idx) const;
    /// Sets the entry at a sorted multi-index; value 0 removes it.
    void set_entry(const MultiIndex& idx, const Rational& value);

    bool operator==(const SymmetricForm& other) const = default;

private:
    int dim_, degree_;
    std::map<MultiIndex, Rational> entries_;
};

/// Homogeneous polynomial of degree d in n variables, sparse over exponent
/// vectors.
class HomoPoly {
public:
    HomoPoly(int dim, int degree);

    int dim() const { return dim_; }
    int degree() const { return degree_; }
    const std::map<ExponentVec, Rational>& terms() const { return terms_; }

    Rational coeff(const ExponentVec& exponents) const;
    void set_coeff(const ExponentVec& exponents, const Rational& value);

    bool operator==(const HomoPoly& other) const = default;

private:
    int dim_, degree_;
    std::map<ExponentVec, Rational> terms_;
};

/// The symmetric d-linear form of a degree-d polynomial: the entry at a
/// multi-index with multiplicity vector m is coeff * m_1! ... m_n! / d!.
SymmetricForm polarize(const HomoPoly& p);

/// v -> Theta(v, ..., v) as a polynomial; inverse of polarize.
HomoPoly associated_poly(const SymmetricForm& f);

/// Theta(w_1, ..., w_d), each w_i of length dim.
Rational evaluate(const SymmetricForm& f, const std::vector<Vec>& vectors);

/// The form (w_1,...,w_d) -> Theta(m w_1, ..., m w_d). m has dim rows; a
/// rectangular m restricts the form to the span of its columns.
SymmetricForm transform(const SymmetricForm& f, const Matrix& m);

/// True iff m is invertible and preserves every value of f.
bool is_isometry(const SymmetricForm& f, const Matrix& m);

/// Forms of equal degree on the direct sum; all mixed entries vanish.
SymmetricForm orthogonal_sum(const SymmetricForm& f1, const SymmetricForm& f2);

/// All sorted k-element multi-indices over 1..n, lexicographic.
std::vector<MultiIndex> sorted_multi_indices(int n, int k);

}  // namespace hdform
