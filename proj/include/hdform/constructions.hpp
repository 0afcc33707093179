#pragma once

#include "hdform/form.hpp"
#include "hdform/poly.hpp"

namespace hdform {

/// A number field Q[x]/(minpoly) with a chosen nonzero element b, given in
/// the power basis.
struct NumberFieldSpec {
    Poly minpoly;  // monic, degree >= 2, squarefree
    Vec b;         // length = degree of minpoly, not all zero
};

/// The symmetrized trace form (1/d!) tr(sum over orderings x_1 ... x_d) on
/// the m x m matrix algebra; the space has dimension m^2 with matrix units
/// ordered row-major.
SymmetricForm trace_form_matrix_algebra(int m, int d);

/// The form (x_1, ..., x_d) -> tr(b x_1 ... x_d) on the number field, in the
/// power basis, with field arithmetic through the companion matrix.
SymmetricForm trace_form_number_field(const NumberFieldSpec& spec, int d);

/// The form of a_1 x_1^d + ... + a_n x_n^d; zero coefficients are allowed
/// but make the form irregular.
SymmetricForm diagonal_form(const Vec& coeffs, int d);

/// Companion matrix of a monic polynomial (columns are images of the power
/// basis under multiplication by x).
Matrix companion_matrix(const Poly& minpoly);

/// Right-multiplication operator R_a - L_a on the m x m matrix algebra, for
/// a given in matrix-unit coordinates. Always lies in the Lie algebra of the
/// matrix trace form.
Matrix ad_operator(const Matrix& a);

}  // namespace hdform
