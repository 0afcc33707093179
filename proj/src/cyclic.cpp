#include "hdform/cyclic.hpp"

#include <stdexcept>

namespace hdform {

bool Report::all_pass() const {
    for (const auto& item : items)
        if (!item.pass) return false;
    return true;
}

Matrix shift_matrix(int n) {
    Matrix psi(n, n);
    for (int j = 2; j <= n; ++j) psi.at(j - 2, j - 1) = 1;
    return psi;
}

CyclicData cyclic_form(int n, int d) {
    if (n < 2 || d < 3) throw std::invalid_argument("cyclic form needs n >= 2 and d >= 3");
    CyclicData c;
    c.n = n;
    c.d = d;
    c.form = SymmetricForm(n, d);
    const int target = (d - 1) * n + 1;
    for (const MultiIndex& idx : sorted_multi_indices(n, d)) {
        int sum = 0;
        for (int i : idx) sum += i;
        if (sum == target) c.form.set_entry(idx, Rational(1));
    }
    c.psi = shift_matrix(n);
    c.grading = Matrix(n, n);
    for (int i = 1; i <= n; ++i) c.grading.at(i - 1, i - 1) = Rational(n - 1 - d * (n - i));
    const Rational inv_d = Rational(1, d);
    for (int r = 0; r <= n - 2; ++r) {
        const Matrix scale = c.grading * inv_d + Matrix::identity(n) * (Rational(r) * Rational(d - 1, d));
        c.witt.push_back(scale * c.psi.pow(r));
    }
    return c;
}

Report verify_grading(const CyclicData& c) {
    Report report;
    bool diagonal = true;
    for (int i = 0; i < c.n; ++i)
        for (int j = 0; j < c.n; ++j)
            if (i != j && c.grading.at(i, j) != 0) diagonal = false;
    report.items.push_back({"grading operator is diagonal", diagonal});
    report.items.push_back({"grading operator satisfies the Lie identity", satisfies_lie_identity(c.form, c.grading)});
    report.items.push_back({"[D, psi] = d psi", bracket(c.grading, c.psi) == c.psi * Rational(c.d)});
    return report;
}

Report witt_check(const CyclicData& c) {
    Report report;
    report.items.push_back(
        {"X_0 .. X_{n-2} linearly independent", static_cast<int>(span_basis(c.witt).size()) == c.n - 1});
    for (int r = 0; r <= c.n - 2; ++r)
        report.items.push_back({"X_" + std::to_string(r) + " satisfies the Lie identity",
                                satisfies_lie_identity(c.form, c.witt[r])});
    const Matrix zero = Matrix::zero(c.n);
    for (int r = 0; r <= c.n - 2; ++r)
        for (int s = r; s <= c.n - 2; ++s) {
            const Matrix expected = (r + s <= c.n - 2) ? c.witt[r + s] * Rational(s - r) : zero;
            report.items.push_back({"[X_" + std::to_string(r) + ", X_" + std::to_string(s) + "] = " +
                                        std::to_string(s - r) + " X_" + std::to_string(r + s),
                                    bracket(c.witt[r], c.witt[s]) == expected});
        }
    for (int r = 0; r <= c.n - 2; ++r) {
        Vec vn(c.n, Rational(0));
        vn[c.n - 1] = 1;
        Vec expected(c.n, Rational(0));
        expected[c.n - 1 - r] = Rational(c.n - 1 - r, c.d);
        report.items.push_back(
            {"X_" + std::to_string(r) + " v_n = (n-1-r)/d v_{n-r}", c.witt[r].apply(vn) == expected});
    }
    return report;
}

Matrix embed_rho(const Matrix& f, int n, int d) {
    if (f.rows() != n || f.cols() != n) throw std::invalid_argument("embed_rho: operator dimension mismatch");
    if (!satisfies_lie_identity(cyclic_form(n, d).form, f))
        throw std::invalid_argument("embed_rho: operator is not in the Lie algebra of the cyclic form");
    Matrix iota(n + 1, n);  // v_i -> v_i
    for (int i = 0; i < n; ++i) iota.at(i, i) = 1;
    Matrix pi(n, n + 1);  // v_i -> v_{i-1}, v_1 -> 0
    for (int j = 2; j <= n + 1; ++j) pi.at(j - 2, j - 1) = 1;
    return iota * f * pi;
}

std::optional<std::pair<Matrix, Vec>> find_cyclic_element(const AlgebraBasis& center_basis, const SymmetricForm& f) {
    const int n = f.dim();
    std::vector<Matrix> candidates(center_basis.members);
    for (std::size_t i = 0; i < center_basis.members.size(); ++i)
        for (std::size_t j = i + 1; j < center_basis.members.size(); ++j) {
            candidates.push_back(center_basis.members[i] + center_basis.members[j]);
            candidates.push_back(center_basis.members[i] - center_basis.members[j]);
            candidates.push_back(center_basis.members[i] + center_basis.members[j] * Rational(2));
        }
    std::vector<Vec> starts;
    Vec en(n, Rational(0)), e1(n, Rational(0)), ones(n, Rational(1));
    en[n - 1] = 1;
    e1[0] = 1;
    starts.push_back(en);
    starts.push_back(e1);
    starts.push_back(ones);
    for (const Matrix& z : candidates)
        for (const Vec& v : starts) {
            std::vector<Vec> krylov{v};
            for (int k = 1; k < n; ++k) krylov.push_back(z.apply(krylov.back()));
            if (is_invertible(from_columns(krylov))) return std::make_pair(z, v);
        }
    return std::nullopt;
}

}  // namespace hdform
