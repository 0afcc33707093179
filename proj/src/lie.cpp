#include "hdform/lie.hpp"

namespace hdform {

Matrix bracket(const Matrix& a, const Matrix& b) { return b * a - a * b; }

Matrix twisted_bracket(const Matrix& f, const Matrix& g, const Matrix& psi) {
    return g * psi * f - f * psi * g;
}

LieBasis lie_algebra(const SymmetricForm& f) {
    const int n = f.dim();
    const int d = f.degree();
    std::vector<Vec> rows;
    for (const MultiIndex& tuple : sorted_multi_indices(n, d)) {
        Vec row(static_cast<std::size_t>(n) * n, Rational(0));
        bool nonzero = false;
        for (std::size_t pos = 0; pos < tuple.size(); ++pos) {
            if (pos > 0 && tuple[pos] == tuple[pos - 1]) continue;
            int multiplicity = 1;
            for (std::size_t q = pos + 1; q < tuple.size() && tuple[q] == tuple[pos]; ++q) ++multiplicity;
            const int b = tuple[pos];
            for (int a = 1; a <= n; ++a) {
                MultiIndex replaced(tuple);
                replaced.erase(replaced.begin() + static_cast<std::ptrdiff_t>(pos));
                replaced.push_back(a);
                const Rational coeff = f.entry(std::move(replaced)) * multiplicity;
                if (coeff != 0) {
                    row[static_cast<std::size_t>(a - 1) * n + (b - 1)] += coeff;
                    nonzero = true;
                }
            }
        }
        if (nonzero) rows.push_back(std::move(row));
    }
    Matrix system(static_cast<int>(rows.size()), n * n);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (int c = 0; c < n * n; ++c) system.at(static_cast<int>(r), c) = rows[r][c];
    LieBasis out;
    out.dim_space = n;
    out.kind = AlgebraKind::lie;
    std::vector<Matrix> raw;
    for (const Vec& flat : nullspace(system)) {
        Matrix m(n, n);
        for (int a = 0; a < n; ++a)
            for (int c = 0; c < n; ++c) m.at(a, c) = flat[static_cast<std::size_t>(a) * n + c];
        raw.push_back(std::move(m));
    }
    out.members = span_basis(raw);
    return out;
}

bool satisfies_lie_identity(const SymmetricForm& f, const Matrix& candidate) {
    const int n = f.dim();
    const int d = f.degree();
    std::vector<Vec> basis(n, Vec(n, Rational(0)));
    for (int i = 0; i < n; ++i) basis[i][i] = 1;
    for (const MultiIndex& tuple : sorted_multi_indices(n, d)) {
        Rational total(0);
        for (int slot = 0; slot < d; ++slot) {
            std::vector<Vec> vectors;
            for (int t = 0; t < d; ++t) vectors.push_back(basis[tuple[t] - 1]);
            vectors[slot] = candidate.apply(vectors[slot]);
            total += evaluate(f, vectors);
        }
        if (total != 0) return false;
    }
    return true;
}

Vec center_action(const Matrix& f, const Matrix& phi, const AlgebraBasis& center_basis) {
    const auto coords = coordinates_in(center_basis.members, bracket(f, phi));
    if (!coords) throw NotInCenterError("bracket with a central element fell outside the center span");
    return *coords;
}

std::vector<int> derived_series(const LieBasis& b) {
    std::vector<Matrix> current = span_basis(b.members);
    for (std::size_t i = 0; i < current.size(); ++i)
        for (std::size_t j = i + 1; j < current.size(); ++j)
            if (!span_contains(current, bracket(current[i], current[j])))
                throw NotClosedError("basis is not closed under the bracket");
    std::vector<int> dims{static_cast<int>(current.size())};
    while (dims.back() != 0) {
        std::vector<Matrix> brackets;
        for (std::size_t i = 0; i < current.size(); ++i)
            for (std::size_t j = i + 1; j < current.size(); ++j) brackets.push_back(bracket(current[i], current[j]));
        std::vector<Matrix> next = span_basis(brackets);
        const int dim = static_cast<int>(next.size());
        if (dim == dims.back()) break;  // stable, nonsolvable tail
        dims.push_back(dim);
        current = std::move(next);
    }
    return dims;
}

}  // namespace hdform
