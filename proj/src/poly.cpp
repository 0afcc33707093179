#include "hdform/poly.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace hdform {

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::operator+(const Poly& other) const {
    std::vector<Rational> out(std::max(coeffs_.size(), other.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) out[i] += other.coeffs_[i];
    return Poly(std::move(out));
}

Poly Poly::operator-(const Poly& other) const { return *this + other * Rational(-1); }

Poly Poly::operator*(const Poly& other) const {
    if (is_zero() || other.is_zero()) return Poly();
    std::vector<Rational> out(coeffs_.size() + other.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
            if (other.coeffs_[j] != 0) out[i + j] += coeffs_[i] * other.coeffs_[j];
    }
    return Poly(std::move(out));
}

Poly Poly::operator*(const Rational& scalar) const {
    std::vector<Rational> out(coeffs_);
    for (auto& c : out) c *= scalar;
    return Poly(std::move(out));
}

Rational Poly::operator()(const Rational& at) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
    return acc;
}

Matrix Poly::operator()(const Matrix& at) const {
    if (!at.is_square()) throw std::invalid_argument("polynomial of non-square matrix");
    Matrix acc(at.rows(), at.cols());
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * at;
        if (*it != 0) acc = acc + Matrix::identity(at.rows()) * *it;
    }
    return acc;
}

Poly Poly::derivative() const {
    if (coeffs_.size() <= 1) return Poly();
    std::vector<Rational> out(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
    return Poly(std::move(out));
}

Poly Poly::monic() const {
    if (is_zero()) return Poly();
    return *this * (Rational(1) / leading());
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const Rational c = coeff(i);
        if (c == 0) continue;
        const bool first = out.empty();
        const Rational mag = c < 0 ? Rational(-c) : c;
        if (!first) out += (c < 0) ? " - " : " + ";
        else if (c < 0) out += "-";
        const bool unit = (mag == 1) && i > 0;
        if (!unit) out += to_string(mag);
        if (i > 0) out += "X";
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw std::invalid_argument("polynomial division by zero");
    std::vector<Rational> rem(num.coeffs());
    const int dd = den.degree();
    if (num.degree() < dd) return {Poly(), num};
    std::vector<Rational> quot(num.degree() - dd + 1, Rational(0));
    for (int i = num.degree(); i >= dd; --i) {
        if (rem[i] == 0) continue;
        const Rational f = rem[i] / den.leading();
        quot[i - dd] = f;
        for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= f * den.coeff(j);
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = divmod(x, y).second;
        x = y;
        y = r;
    }
    return x.is_zero() ? x : x.monic();
}

std::vector<Rational> rational_roots(const Poly& p) {
    if (p.is_zero()) throw std::invalid_argument("roots of the zero polynomial");
    // Scale to a primitive integer polynomial, then apply the rational root
    // theorem: candidates are (divisors of constant)/(divisors of leading).
    Integer lcm(1);
    for (const auto& c : p.coeffs()) lcm = boost::multiprecision::lcm(lcm, denominator(c));
    std::vector<Integer> ic;
    for (const auto& c : p.coeffs()) ic.push_back(numerator(c) * (lcm / denominator(c)));
    int low = 0;
    while (ic[low] == 0) ++low;  // factor out X^low; root 0 handled separately
    std::vector<Rational> roots;
    if (low > 0) roots.push_back(Rational(0));
    const Integer a0 = boost::multiprecision::abs(ic[low]);
    const Integer an = boost::multiprecision::abs(ic.back());
    auto divisors = [](const Integer& v) {
        std::vector<Integer> ds;
        for (Integer i = 1; i * i <= v; ++i)
            if (v % i == 0) {
                ds.push_back(i);
                if (i * i != v) ds.push_back(v / i);
            }
        return ds;
    };
    for (const Integer& num : divisors(a0))
        for (const Integer& den : divisors(an)) {
            if (boost::multiprecision::gcd(num, den) != 1) continue;
            const Rational cand = make_rational(num, den);
            if (p(cand) == 0) roots.push_back(cand);
            if (p(-cand) == 0) roots.push_back(-cand);
        }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

namespace {

// Yun's algorithm: p = prod_i parts[i].first ^ parts[i].second with the
// squarefree parts pairwise coprime.
std::vector<std::pair<Poly, int>> squarefree_parts(const Poly& p) {
    std::vector<std::pair<Poly, int>> parts;
    Poly g = poly_gcd(p, p.derivative());
    if (g.degree() <= 0) {
        parts.push_back({p.monic(), 1});
        return parts;
    }
    Poly w = divmod(p, g).first.monic();
    Poly y = divmod(p.derivative(), g).first;
    int i = 1;
    while (w.degree() > 0) {
        Poly z = y - w.derivative();
        Poly s = poly_gcd(w, z);
        if (s.degree() > 0) parts.push_back({s, i});
        w = divmod(w, s).first.monic();
        y = divmod(z, s).first;
        ++i;
    }
    return parts;
}

// Exact factorization of a monic squarefree quartic into two monic rational
// quadratics, when one exists. Depressed form t^4 + p t^2 + q t + r splits as
// (t^2 + ut + v)(t^2 - ut + w) iff z = u^2 is a root of the resolvent cubic
// z^3 + 2p z^2 + (p^2 - 4r) z - q^2.
std::vector<Poly> quartic_quadratic_split(const Poly& f) {
    const Rational shift = f.coeff(3) / 4;
    // Depress: composed(t) = f(t - shift) = t^4 + p t^2 + q t + r.
    const Poly t_minus = Poly({-shift, Rational(1)});
    Poly composed = Poly::constant(f.coeff(f.degree()));
    for (int i = f.degree() - 1; i >= 0; --i) composed = composed * t_minus + Poly::constant(f.coeff(i));
    const Rational p = composed.coeff(2), q = composed.coeff(1), r = composed.coeff(0);
    const Poly resolvent({-q * q, p * p - Rational(4) * r, Rational(2) * p, Rational(1)});
    for (const Rational& z : rational_roots(resolvent)) {
        if (z < 0) continue;
        Rational u, v, w;
        if (z == 0) {
            if (q != 0) continue;  // z=0 root only usable in the biquadratic case
            const auto disc = rational_root_d(p * p - Rational(4) * r, 2);
            if (!disc) continue;
            u = 0;
            v = (p + *disc) / 2;
            w = (p - *disc) / 2;
        } else {
            const auto root = rational_root_d(z, 2);
            if (!root) continue;
            u = *root;
            v = ((p + z) - q / u) / 2;
            w = ((p + z) + q / u) / 2;
        }
        const Poly g({v, u, Rational(1)}), h({w, -u, Rational(1)});
        // Translate back: factor of f(x) is g(x + shift).
        const Poly x_plus = Poly({shift, Rational(1)});
        auto compose = [&](const Poly& poly) {
            Poly acc = Poly::constant(poly.coeff(poly.degree()));
            for (int i = poly.degree() - 1; i >= 0; --i) acc = acc * x_plus + Poly::constant(poly.coeff(i));
            return acc;
        };
        const Poly gf = compose(g), hf = compose(h);
        if (gf * hf == f && poly_gcd(gf, hf).degree() == 0) return {gf, hf};
    }
    return {};
}

// Splits a monic squarefree polynomial into coprime monic pieces.
std::vector<Poly> split_squarefree(const Poly& f) {
    std::vector<Poly> out;
    Poly rest = f;
    for (const Rational& root : rational_roots(f)) {
        out.push_back(Poly::linear_root(root));
        rest = divmod(rest, out.back()).first;
    }
    if (rest.degree() == 4) {
        auto pair = quartic_quadratic_split(rest);
        if (!pair.empty()) {
            out.insert(out.end(), pair.begin(), pair.end());
            return out;
        }
    }
    if (rest.degree() > 0) out.push_back(rest.monic());
    return out;
}

}  // namespace

std::vector<Poly> factor_coprime(const Poly& p) {
    if (p.is_zero() || !p.is_monic()) throw std::invalid_argument("factor_coprime needs a monic polynomial");
    if (p.degree() == 0) return {p};
    std::vector<Poly> factors;
    for (const auto& [part, mult] : squarefree_parts(p)) {
        for (const Poly& piece : split_squarefree(part)) {
            Poly powed = Poly::constant(Rational(1));
            for (int i = 0; i < mult; ++i) powed = powed * piece;
            factors.push_back(powed);
        }
    }
    return factors;
}

Poly minimal_polynomial(const Matrix& m) {
    if (!m.is_square()) throw std::invalid_argument("minimal polynomial of non-square matrix");
    const int n = m.rows();
    // First linear dependence among I, m, m^2, ... as n^2-vectors.
    std::vector<Matrix> powers{Matrix::identity(n)};
    for (int k = 1; k <= n; ++k) {
        powers.push_back(powers.back() * m);
        const auto coords = coordinates_in({powers.begin(), powers.end() - 1}, powers.back());
        if (coords) {
            std::vector<Rational> cs(k + 1, Rational(1));
            for (int i = 0; i < k; ++i) cs[i] = -(*coords)[i];
            return Poly(std::move(cs));
        }
    }
    throw std::logic_error("minimal polynomial not found below dimension bound");
}

}  // namespace hdform
