#pragma once

#include <optional>
#include <vector>

#include "hdform/form.hpp"

namespace hdform {

enum class AlgebraKind { center, lie, centralizer };

/// Linearly independent matrices spanning a subspace of End(V), normalized
/// to the canonical echelon basis over flattened entries.
struct AlgebraBasis {
    int dim_space = 0;
    AlgebraKind kind = AlgebraKind::center;
    std::vector<Matrix> members;

    int dim() const { return static_cast<int>(members.size()); }
};

/// Basis of {w : Theta(w, v_2, ..., v_d) = 0 for all v_i}. Empty iff regular.
std::vector<Vec> radical(const SymmetricForm& f);

bool is_regular(const SymmetricForm& f);

struct CenterResult {
    AlgebraBasis basis;
    /// The center is a notion for regular forms; this flags irregular input.
    bool input_regular = true;
};

/// All f with Theta(f v_1, v_2, ...) = Theta(v_1, f v_2, ...); always
/// contains the identity.
CenterResult center(const SymmetricForm& f);

/// All matrices commuting with every member of the given basis.
AlgebraBasis centralizer(const AlgebraBasis& basis);

/// True iff the span equals its own centralizer in End(V).
bool is_maximal_center(const AlgebraBasis& basis);

struct Component {
    SymmetricForm form;
    /// Columns are the component's basis inside the original space.
    Matrix embedding;
};

struct Decomposition {
    std::vector<Component> components;
    /// Concatenated embeddings; transform(f, basis_change) is the orthogonal
    /// sum of the component forms.
    Matrix basis_change;

    bool indecomposable_over_Q() const { return components.size() == 1; }
};

/// Splits a regular form into pairwise-orthogonal components along rational
/// idempotents of the center: deterministic sweep of central elements, whose
/// minimal polynomials are split by factor_coprime; kernels of the coprime
/// factors give the blocks, recursively. A single component means no
/// splitting idempotent was found over the rationals.
Decomposition decompose(const SymmetricForm& f);

/// Searches for nonzero w with Theta(w, w, v_3, ..., v_d) = 0 for all v_i:
/// basis vectors first, then all vectors with entries of height <= budget.
/// A witness certifies the form is not 2-regular; nullopt is inconclusive.
std::optional<Vec> two_regular_falsifier(const SymmetricForm& f, int budget);

}  // namespace hdform
