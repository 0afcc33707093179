#include "hdform/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hdform {

SymmetricForm trace_form_matrix_algebra(int m, int d) {
    if (m < 2 || d < 3) throw std::invalid_argument("matrix trace form needs m >= 2 and d >= 3");
    const int n = m * m;
    // Basis unit u (1-based) is E_{rc} with r = (u-1) / m, c = (u-1) % m.
    // Products of units are units: E_{ab} E_{cd} = [b == c] E_{ad}, so a
    // permutation product is tracked as a (row, col, alive) triple.
    const Rational inv_dfact = Rational(1) / [d] {
        Rational f(1);
        for (int i = 2; i <= d; ++i) f *= i;
        return f;
    }();
    SymmetricForm form(n, d);
    for (const MultiIndex& idx : sorted_multi_indices(n, d)) {
        std::vector<int> order(d);
        std::iota(order.begin(), order.end(), 0);
        Rational sum(0);
        do {
            int row = -1, col = -1;
            bool alive = true;
            for (int pos = 0; pos < d && alive; ++pos) {
                const int unit = idx[order[pos]] - 1;
                const int ur = unit / m, uc = unit % m;
                if (pos == 0) {
                    row = ur;
                    col = uc;
                } else if (col == ur) {
                    col = uc;
                } else {
                    alive = false;
                }
            }
            if (alive && row == col) sum += 1;
        } while (std::next_permutation(order.begin(), order.end()));
        if (sum != 0) form.set_entry(idx, sum * inv_dfact);
    }
    return form;
}

Matrix companion_matrix(const Poly& minpoly) {
    if (!minpoly.is_monic() || minpoly.degree() < 1) throw std::invalid_argument("companion matrix needs a monic polynomial");
    const int n = minpoly.degree();
    Matrix c(n, n);
    for (int i = 1; i < n; ++i) c.at(i, i - 1) = 1;
    for (int i = 0; i < n; ++i) c.at(i, n - 1) = -minpoly.coeff(i);
    return c;
}

SymmetricForm trace_form_number_field(const NumberFieldSpec& spec, int d) {
    if (d < 3) throw std::invalid_argument("number field trace form needs d >= 3");
    if (!spec.minpoly.is_monic() || spec.minpoly.degree() < 2)
        throw std::invalid_argument("minimal polynomial must be monic of degree >= 2");
    if (poly_gcd(spec.minpoly, spec.minpoly.derivative()).degree() != 0)
        throw std::invalid_argument("minimal polynomial must be squarefree");
    const int n = spec.minpoly.degree();
    if (static_cast<int>(spec.b.size()) != n) throw std::invalid_argument("b must have one coordinate per power basis element");
    if (std::all_of(spec.b.begin(), spec.b.end(), [](const Rational& r) { return r == 0; }))
        throw std::invalid_argument("b must be nonzero");
    const Matrix comp = companion_matrix(spec.minpoly);
    Matrix mult_b(n, n);
    Matrix power = Matrix::identity(n);
    for (int i = 0; i < n; ++i) {
        if (spec.b[i] != 0) mult_b = mult_b + power * spec.b[i];
        if (i < n - 1) power = power * comp;
    }
    // tr(b x^{i_1 + ... + i_d}) on power-basis elements x^{i-1}.
    std::vector<Rational> traces;  // traces[k] = tr(mult_b comp^k)
    Matrix acc = mult_b;
    for (int k = 0; k <= d * (n - 1); ++k) {
        traces.push_back(acc.trace());
        acc = acc * comp;
    }
    SymmetricForm form(n, d);
    for (const MultiIndex& idx : sorted_multi_indices(n, d)) {
        int total = 0;
        for (int i : idx) total += i - 1;
        if (traces[total] != 0) form.set_entry(idx, traces[total]);
    }
    return form;
}

SymmetricForm diagonal_form(const Vec& coeffs, int d) {
    if (coeffs.empty() || d < 3) throw std::invalid_argument("diagonal form needs coefficients and d >= 3");
    SymmetricForm form(static_cast<int>(coeffs.size()), d);
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (coeffs[i] != 0) form.set_entry(MultiIndex(d, static_cast<int>(i) + 1), coeffs[i]);
    return form;
}

Matrix ad_operator(const Matrix& a) {
    if (!a.is_square()) throw std::invalid_argument("ad needs a square matrix");
    const int m = a.rows();
    const int n = m * m;
    Matrix out(n, n);
    // Column for unit E_{rc}: coordinates of E_{rc} a - a E_{rc}.
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c) {
            const int col = r * m + c;
            for (int k = 0; k < m; ++k) {
                out.at(r * m + k, col) += a.at(c, k);   // E_{rc} a
                out.at(k * m + c, col) -= a.at(k, r);   // a E_{rc}
            }
        }
    return out;
}

}  // namespace hdform
