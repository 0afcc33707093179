#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hdform/form.hpp"
#include "hdform/lie.hpp"
#include "hdform/structure.hpp"

namespace hdform {

/// The standard regular indecomposable cyclic d-linear space in dimension n,
/// together with the operators that organize its Lie algebra.
struct CyclicData {
    int n = 0;
    int d = 0;
    /// Entry 1 exactly on sorted multi-indices summing to (d-1)n + 1.
    SymmetricForm form{1, 2};
    /// The shift v_i -> v_{i-1}; ones on the superdiagonal, psi^n = 0.
    Matrix psi;
    /// Diagonal grading operator, entry n - 1 - d(n-i) at position i.
    Matrix grading;
    /// witt[r] = (grading/d + r (d-1)/d I) psi^r for r = 0 .. n-2; together
    /// with the truncation X_t = 0 for t >= n-1 they satisfy
    /// [X_r, X_s] = (s - r) X_{r+s}.
    std::vector<Matrix> witt;
};

/// Builds the cyclic space for n >= 2, d >= 3.
CyclicData cyclic_form(int n, int d);

/// The shift matrix on dimension n (column j has a 1 in row j-1).
Matrix shift_matrix(int n);

struct CheckItem {
    std::string what;
    bool pass = false;
};

struct Report {
    std::vector<CheckItem> items;
    bool all_pass() const;
};

/// Grading facts: the grading operator is diagonal, lies in the Lie algebra
/// (checked through the defining identity), and [D, psi] = d psi.
Report verify_grading(const CyclicData& c);

/// Witt facts: the X_r are independent members of the Lie algebra, all
/// pairwise brackets follow the truncated rule, and X_r v_n = (n-1-r)/d
/// v_{n-r}.
Report witt_check(const CyclicData& c);

/// The dimension-raising Lie embedding iota . f . pi from operators on V_n
/// to operators on V_{n+1}; requires f in the Lie algebra of the cyclic form
/// (n, d). Intertwines the psi-twisted bracket with the plain one.
Matrix embed_rho(const Matrix& f, int n, int d);

/// A central element with a cyclic vector (Krylov matrix invertible), if the
/// deterministic sweep finds one. center_basis must be the center of f.
std::optional<std::pair<Matrix, Vec>> find_cyclic_element(const AlgebraBasis& center_basis, const SymmetricForm& f);

}  // namespace hdform
