#pragma once

#include <stdexcept>
#include <vector>

#include "hdform/form.hpp"
#include "hdform/structure.hpp"

namespace hdform {

using LieBasis = AlgebraBasis;

struct NotInCenterError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotClosedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Lie bracket of endomorphisms. Operator products in this library are read
/// left to right (apply a, then b), so as matrices [a, b] = b a - a b.
Matrix bracket(const Matrix& a, const Matrix& b);

/// The bracket twisted by a central element: [f, g]_psi = f psi g - g psi f
/// with products read left to right. psi = I recovers the plain bracket.
Matrix twisted_bracket(const Matrix& f, const Matrix& g, const Matrix& psi);

/// Basis of {L : sum_i Theta(v_1, ..., L v_i, ..., v_d) = 0}; one equation
/// per sorted d-multi-index since the condition is symmetric in the tuple.
LieBasis lie_algebra(const SymmetricForm& f);

/// Verifies the defining identity for one matrix directly through evaluate,
/// independently of the kernel solver.
bool satisfies_lie_identity(const SymmetricForm& f, const Matrix& candidate);

/// Coordinates of [f, phi] in the center basis. The bracket of a Lie member
/// with a central element is always central; falling outside signals a bug.
Vec center_action(const Matrix& f, const Matrix& phi, const AlgebraBasis& center_basis);

/// Dimensions of b, [b,b], [[b,b],[b,b]], ... until stable; ends in 0 iff
/// solvable. Throws NotClosedError when a bracket of members leaves the span.
std::vector<int> derived_series(const LieBasis& b);

}  // namespace hdform
