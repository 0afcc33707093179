#include "hdform/group.hpp"

#include "hdform/form.hpp"

namespace hdform {

CenterAut::CenterAut(int n_, Vec a_) : n(n_), a(std::move(a_)) {
    if (n < 2) throw std::invalid_argument("center automorphism needs n >= 2");
    if (static_cast<int>(a.size()) != n - 1) throw std::invalid_argument("coefficient vector must have length n-1");
    if (a[0] == 0) throw std::invalid_argument("a_1 must be nonzero");
}

CenterAut CenterAut::identity(int n) {
    Vec a(n - 1, Rational(0));
    a[0] = 1;
    return CenterAut(n, std::move(a));
}

Matrix rho1(const CenterAut& a, const Matrix& psi) {
    if (psi.rows() != a.n || psi.cols() != a.n) throw std::invalid_argument("rho1: psi dimension mismatch");
    Matrix out(a.n, a.n);
    Matrix power = psi;
    for (int i = 1; i <= a.n - 1; ++i) {
        if (a.a[i - 1] != 0) out = out + power * a.a[i - 1];
        if (i < a.n - 1) power = power * psi;
    }
    return out;
}

namespace {

// Coefficient vectors of polynomials in psi, truncated mod psi^n.
Vec poly_mul_mod(const Vec& x, const Vec& y, int n) {
    Vec out(n, Rational(0));
    for (int i = 0; i < n; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j + i < n; ++j)
            if (y[j] != 0) out[i + j] += x[i] * y[j];
    }
    return out;
}

}  // namespace

Matrix rho2(const CenterAut& a) {
    const int n = a.n;
    Vec gen(n, Rational(0));
    for (int i = 1; i < n; ++i) gen[i] = a.a[i - 1];
    Matrix out(n, n);
    Vec power(n, Rational(0));
    power[0] = 1;  // psi^0
    for (int col = 0; col < n; ++col) {
        for (int row = 0; row < n; ++row) out.at(row, col) = power[row];
        if (col < n - 1) power = poly_mul_mod(power, gen, n);
    }
    return out;
}

CenterAut group_mul(const CenterAut& a, const CenterAut& b) {
    if (a.n != b.n) throw std::invalid_argument("group_mul: dimension mismatch");
    Vec bcol(a.n, Rational(0));
    for (int i = 1; i < a.n; ++i) bcol[i] = b.a[i - 1];
    const Vec prod = rho2(a).apply(bcol);
    return CenterAut(a.n, Vec(prod.begin() + 1, prod.end()));
}

CenterAut group_inv(const CenterAut& a) {
    Vec target(a.n, Rational(0));
    target[1] = 1;  // coordinates of psi
    const auto x = solve(rho2(a), target);
    if (!x) throw std::logic_error("group_inv: triangular system unsolvable");  // a_1 != 0 rules this out
    return CenterAut(a.n, Vec(x->begin() + 1, x->end()));
}

namespace {

// m = sum_k coeffs[k] psi^k has constant upper diagonals; read them off the
// first row, then verify exactly.
std::optional<Vec> psi_power_coordinates(const Matrix& m) {
    const int n = m.rows();
    Vec coeffs(n, Rational(0));
    for (int k = 0; k < n; ++k) coeffs[k] = m.at(0, k);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Rational expected = (j >= i) ? coeffs[j - i] : Rational(0);
            if (m.at(i, j) != expected) return std::nullopt;
        }
    return coeffs;
}

}  // namespace

CenterAut chi(const Matrix& sigma, const CyclicData& c) {
    if (!is_isometry(c.form, sigma)) throw NotIsometryError("chi: sigma is not an isometry of the form");
    const Matrix conj = sigma * c.psi * *inverse(sigma);
    const auto coeffs = psi_power_coordinates(conj);
    if (!coeffs || (*coeffs)[0] != 0)
        throw NotInCenterSpanError("chi: conjugated shift is not in the span of psi powers");
    return CenterAut(c.n, Vec(coeffs->begin() + 1, coeffs->end()));
}

Matrix lift(const CenterAut& a, int n, int d) {
    if (a.n != n) throw std::invalid_argument("lift: dimension mismatch");
    const CyclicData cyc = cyclic_form(n, d);
    const Matrix big_psi = rho1(a, cyc.psi);
    std::vector<Matrix> psi_pow{Matrix::identity(n)};
    for (int i = 1; i < n; ++i) psi_pow.push_back(psi_pow.back() * big_psi);

    // c_n first: invariance on (v_1, v_n, ..., v_n) reads a_1^{n-1} c_n^d = 1.
    const auto cn = rational_root_d(Rational(1) / pow_rational(a.a[0], n - 1), d);
    if (!cn) throw NoRationalLiftError("lift: a_1^{n-1} has no rational d-th root");
    Vec c(n, Rational(0));
    c[n - 1] = *cn;

    // Remaining unknowns in decreasing index order; the invariance equation
    // on (v_k, v_n, ..., v_n) is linear in c_{n-k+1} with leading
    // coefficient d a_1^{n-k} c_n^{d-1} != 0.
    for (int k = 2; k <= n; ++k) {
        const int unknown = n - k;  // 0-based slot of c_{n-k+1}
        const auto equation_value = [&](const Rational& x) {
            Vec trial(c);
            trial[unknown] = x;
            std::vector<Vec> tuple{psi_pow[n - k].apply(trial)};
            for (int t = 1; t < d; ++t) tuple.push_back(trial);
            return evaluate(cyc.form, tuple);
        };
        const Rational at_zero = equation_value(Rational(0));
        const Rational slope = equation_value(Rational(1)) - at_zero;
        if (slope == 0) throw InconsistentLiftError("lift: triangular pass stalled");
        c[unknown] = -at_zero / slope;
    }

    std::vector<Vec> columns;
    for (int i = 1; i <= n; ++i) columns.push_back(psi_pow[n - i].apply(c));
    const Matrix sigma = from_columns(columns);
    if (!is_isometry(cyc.form, sigma))
        throw InconsistentLiftError("lift: candidate failed isometry verification");
    return sigma;
}

std::vector<Matrix> kernel_check(int n, int d) {
    const CyclicData cyc = cyclic_form(n, d);
    std::vector<Matrix> kernel{Matrix::identity(n)};
    if (d % 2 == 0) kernel.push_back(-Matrix::identity(n));
    for (const Matrix& zeta : kernel) {
        if (!is_isometry(cyc.form, zeta)) throw std::logic_error("kernel_check: scalar candidate is not an isometry");
        if (!(chi(zeta, cyc) == CenterAut::identity(n)))
            throw std::logic_error("kernel_check: scalar isometry does not act trivially");
    }
    return kernel;
}

}  // namespace hdform
