#include "hdform/structure.hpp"

#include <algorithm>
#include <stdexcept>

#include "hdform/poly.hpp"

namespace hdform {

std::vector<Vec> radical(const SymmetricForm& f) {
    const int n = f.dim();
    const auto tails = sorted_multi_indices(n, f.degree() - 1);
    Matrix system(static_cast<int>(tails.size()), n);
    for (std::size_t row = 0; row < tails.size(); ++row)
        for (int a = 1; a <= n; ++a) {
            MultiIndex idx(tails[row]);
            idx.push_back(a);
            system.at(static_cast<int>(row), a - 1) = f.entry(std::move(idx));
        }
    return nullspace(system);
}

bool is_regular(const SymmetricForm& f) { return radical(f).empty(); }

CenterResult center(const SymmetricForm& f) {
    const int n = f.dim();
    // Unknown F[a][c] at flat column a*n + c; by symmetry of the form the
    // slot pair (1,2) suffices, and only unordered pairs i < j give
    // non-vacuous equations.
    const auto tails = sorted_multi_indices(n, f.degree() - 2);
    std::vector<Vec> rows;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (const auto& tail : tails) {
                Vec row(static_cast<std::size_t>(n) * n, Rational(0));
                bool nonzero = false;
                for (int a = 1; a <= n; ++a) {
                    MultiIndex left(tail);
                    left.push_back(a);
                    left.push_back(j);
                    const Rational cl = f.entry(std::move(left));
                    if (cl != 0) {
                        row[static_cast<std::size_t>(a - 1) * n + (i - 1)] += cl;
                        nonzero = true;
                    }
                    MultiIndex right(tail);
                    right.push_back(a);
                    right.push_back(i);
                    const Rational cr = f.entry(std::move(right));
                    if (cr != 0) {
                        row[static_cast<std::size_t>(a - 1) * n + (j - 1)] -= cr;
                        nonzero = true;
                    }
                }
                if (nonzero) rows.push_back(std::move(row));
            }
    Matrix system(static_cast<int>(rows.size()), n * n);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (int c = 0; c < n * n; ++c) system.at(static_cast<int>(r), c) = rows[r][c];
    CenterResult result;
    result.input_regular = is_regular(f);
    result.basis.dim_space = n;
    result.basis.kind = AlgebraKind::center;
    std::vector<Matrix> raw;
    for (const Vec& flat : nullspace(system)) {
        Matrix m(n, n);
        for (int a = 0; a < n; ++a)
            for (int c = 0; c < n; ++c) m.at(a, c) = flat[static_cast<std::size_t>(a) * n + c];
        raw.push_back(std::move(m));
    }
    result.basis.members = span_basis(raw);
    return result;
}

AlgebraBasis centralizer(const AlgebraBasis& basis) {
    const int n = basis.dim_space;
    std::vector<Vec> rows;
    for (const Matrix& b : basis.members) {
        // m b - b m = 0, entry (r, c): sum_k m[r][k] b[k][c] - b[r][k] m[k][c].
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) {
                Vec row(static_cast<std::size_t>(n) * n, Rational(0));
                bool nonzero = false;
                for (int k = 0; k < n; ++k) {
                    if (b.at(k, c) != 0) {
                        row[static_cast<std::size_t>(r) * n + k] += b.at(k, c);
                        nonzero = true;
                    }
                    if (b.at(r, k) != 0) {
                        row[static_cast<std::size_t>(k) * n + c] -= b.at(r, k);
                        nonzero = true;
                    }
                }
                if (nonzero) rows.push_back(std::move(row));
            }
    }
    Matrix system(static_cast<int>(rows.size()), n * n);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (int c = 0; c < n * n; ++c) system.at(static_cast<int>(r), c) = rows[r][c];
    AlgebraBasis out;
    out.dim_space = n;
    out.kind = AlgebraKind::centralizer;
    if (rows.empty()) {
        // Nothing to commute with: the whole matrix algebra.
        for (int a = 0; a < n; ++a)
            for (int c = 0; c < n; ++c) {
                Matrix unit(n, n);
                unit.at(a, c) = 1;
                out.members.push_back(std::move(unit));
            }
        return out;
    }
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

bool is_maximal_center(const AlgebraBasis& basis) {
    return span_equal(centralizer(basis).members, basis.members);
}

namespace {

// Deterministic sweep order: basis members, then b_i + b_j, b_i - b_j,
// b_i + 2 b_j for i < j.
std::vector<Matrix> central_candidates(const std::vector<Matrix>& basis) {
    std::vector<Matrix> out(basis);
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            out.push_back(basis[i] + basis[j]);
            out.push_back(basis[i] - basis[j]);
            out.push_back(basis[i] + basis[j] * Rational(2));
        }
    return out;
}

void decompose_into(const SymmetricForm& f, const Matrix& embedding, std::vector<Component>& sink) {
    const int n = f.dim();
    if (n > 1) {
        const CenterResult c = center(f);
        for (const Matrix& z : central_candidates(c.basis.members)) {
            const auto factors = factor_coprime(minimal_polynomial(z));
            if (factors.size() < 2) continue;
            std::vector<std::pair<SymmetricForm, Matrix>> blocks;
            for (const Poly& p : factors) {
                const Matrix sub = from_columns(nullspace(p(z)));
                blocks.emplace_back(transform(f, sub), embedding * sub);
            }
            for (const auto& [block_form, block_embed] : blocks) decompose_into(block_form, block_embed, sink);
            return;
        }
    }
    sink.push_back({f, embedding});
}

}  // namespace

Decomposition decompose(const SymmetricForm& f) {
    if (!is_regular(f)) throw std::invalid_argument("decompose: irregular form rejected");
    Decomposition out;
    decompose_into(f, Matrix::identity(f.dim()), out.components);
    std::vector<Vec> columns;
    for (const Component& comp : out.components)
        for (int j = 0; j < comp.embedding.cols(); ++j) {
            Vec col(comp.embedding.rows());
            for (int i = 0; i < comp.embedding.rows(); ++i) col[i] = comp.embedding.at(i, j);
            columns.push_back(std::move(col));
        }
    out.basis_change = from_columns(columns);
    return out;
}

std::optional<Vec> two_regular_falsifier(const SymmetricForm& f, int budget) {
    const int n = f.dim();
    const auto tails = sorted_multi_indices(n, f.degree() - 2);
    const auto is_witness = [&](const Vec& w) {
        for (const auto& tail : tails) {
            std::vector<Vec> vectors{w, w};
            for (int t : tail) {
                Vec e(n, Rational(0));
                e[t - 1] = 1;
                vectors.push_back(std::move(e));
            }
            if (evaluate(f, vectors) != 0) return false;
        }
        return true;
    };
    for (int i = 0; i < n; ++i) {
        Vec e(n, Rational(0));
        e[i] = 1;
        if (is_witness(e)) return e;
    }
    // Exhaustive small-height search, first nonzero coordinate positive.
    // Witness equations are homogeneous, so integer candidates suffice.
    for (int height = 1; height <= budget; ++height) {
        Vec w(n, Rational(0));
        const long base = 2 * height + 1;
        long total = 1;
        for (int i = 0; i < n; ++i) {
            if (total > 10'000'000 / base) throw std::invalid_argument("two_regular_falsifier: budget too large");
            total *= base;
        }
        for (long code = 1; code < total; ++code) {
            long rest = code;
            bool skip = false;
            for (int i = 0; i < n; ++i) {
                const long digit = rest % base;
                rest /= base;
                w[i] = Rational(digit <= height ? digit : digit - base);
            }
            for (int i = 0; i < n; ++i) {
                if (w[i] == 0) continue;
                skip = w[i] < 0;
                break;
            }
            if (skip) continue;
            if (is_witness(w)) return w;
        }
    }
    return std::nullopt;
}

}  // namespace hdform
