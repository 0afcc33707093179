#pragma once

#include <string>
#include <vector>

#include "hdform/matrix.hpp"
#include "hdform/rational.hpp"

namespace hdform {

/// Univariate polynomial over the rationals, coefficients in ascending
/// degree. The zero polynomial is the empty coefficient list.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    static Poly constant(const Rational& c) { return Poly({c}); }
    static Poly x() { return Poly({Rational(0), Rational(1)}); }
    /// X - r
    static Poly linear_root(const Rational& r) { return Poly({-r, Rational(1)}); }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coeff(int i) const { return i < static_cast<int>(coeffs_.size()) ? coeffs_[i] : Rational(0); }
    Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

    Poly operator+(const Poly& other) const;
    Poly operator-(const Poly& other) const;
    Poly operator*(const Poly& other) const;
    Poly operator*(const Rational& scalar) const;
    bool operator==(const Poly& other) const = default;

    Rational operator()(const Rational& at) const;
    Matrix operator()(const Matrix& at) const;

    Poly derivative() const;
    Poly monic() const;

    /// Human-readable form like "X^2 - 3X + 2", used in reports.
    std::string str() const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Quotient and remainder; divisor must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den);

/// Monic gcd (zero polynomial if both inputs are zero).
Poly poly_gcd(const Poly& a, const Poly& b);

/// The rational roots of a nonzero polynomial, ascending.
std::vector<Rational> rational_roots(const Poly& p);

/// Best-effort splitting of a monic polynomial into pairwise-coprime monic
/// factors: squarefree (Yun) decomposition, then rational-root extraction,
/// then an exact quadratic-pair split for quartics. Factors need not be
/// irreducible; their product is the input and pairwise gcds are 1.
std::vector<Poly> factor_coprime(const Poly& p);

/// Least-degree monic p with p(m) = 0.
Poly minimal_polynomial(const Matrix& m);

}  // namespace hdform
