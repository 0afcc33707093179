#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "hdform/cyclic.hpp"
#include "hdform/matrix.hpp"

namespace hdform {

struct NoRationalLiftError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
/// Signals a bug: the construction below never stalls for well-formed input.
struct InconsistentLiftError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotIsometryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotInCenterSpanError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Automorphism of the center of a cyclic space, coordinatized by the image
/// of psi: psi -> a_1 psi + ... + a_{n-1} psi^{n-1} with a_1 != 0.
struct CenterAut {
    CenterAut(int n, Vec a);

    static CenterAut identity(int n);

    int n;
    Vec a;  // (a_1, ..., a_{n-1})

    bool operator==(const CenterAut& other) const = default;
};

/// The matrix a_1 psi + a_2 psi^2 + ... + a_{n-1} psi^{n-1}.
Matrix rho1(const CenterAut& a, const Matrix& psi);

/// Column i holds the coordinates of rho1(a)^i in the basis I, psi, ...,
/// psi^{n-1}; lower triangular with diagonal 1, a_1, a_1^2, ...
Matrix rho2(const CenterAut& a);

/// Group law: the second column, first entry dropped, of rho2(a) rho2(b).
/// Composition order: b's substitution first, then a's.
CenterAut group_mul(const CenterAut& a, const CenterAut& b);

CenterAut group_inv(const CenterAut& a);

/// The conjugation action of an isometry on the center, read off in psi
/// powers. Throws NotIsometryError for non-isometries; NotInCenterSpanError
/// cannot fire for true isometries and signals a bug.
CenterAut chi(const Matrix& sigma, const CyclicData& c);

/// A rational isometry sigma with chi(sigma) = a, when one exists: sigma is
/// determined by c = sigma(v_n) via sigma(v_i) = rho1(a)^{n-i} c; the
/// invariance equation on (v_1, v_n, ..., v_n) pins c_n^d, and the remaining
/// unknowns follow one at a time, each equation linear in the next one. The
/// candidate is verified before being returned. Throws NoRationalLiftError
/// when the needed d-th root is irrational.
Matrix lift(const CenterAut& a, int n, int d);

/// Rational scalar isometries of the cyclic space: {I} for odd d, {I, -I}
/// for even d. These are exactly the rational points of the kernel of chi.
std::vector<Matrix> kernel_check(int n, int d);

}  // namespace hdform
