#pragma once

#include <initializer_list>
#include <optional>
#include <vector>

#include "hdform/rational.hpp"

namespace hdform {

using Vec = std::vector<Rational>;

/// Dense matrix over the rationals, row-major. Columns are images of basis
/// vectors throughout the library.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), entries_(static_cast<std::size_t>(rows) * cols) {}
    /// Row-major construction from integer literals, for tests and tables.
    Matrix(int rows, int cols, std::initializer_list<long> values);

    static Matrix identity(int n);
    static Matrix zero(int n) { return Matrix(n, n); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int r, int c) { return entries_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Rational& at(int r, int c) const { return entries_[static_cast<std::size_t>(r) * cols_ + c]; }

    const std::vector<Rational>& flat() const { return entries_; }

    Matrix operator+(const Matrix& other) const;
    Matrix operator-(const Matrix& other) const;
    Matrix operator*(const Matrix& other) const;
    Matrix operator*(const Rational& scalar) const;
    Matrix operator-() const { return *this * Rational(-1); }
    bool operator==(const Matrix& other) const = default;

    Vec apply(const Vec& v) const;
    Matrix transpose() const;
    Matrix pow(int exponent) const;
    Rational trace() const;
    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

private:
    int rows_, cols_;
    std::vector<Rational> entries_;
};

inline Matrix operator*(const Rational& scalar, const Matrix& m) { return m * scalar; }

/// Reduced row echelon form; pivots normalized to 1, rows ordered by pivot
/// column, zero rows dropped. Canonical for a given row space.
Matrix rref(const Matrix& m);

int rank(const Matrix& m);

bool is_invertible(const Matrix& m);

std::optional<Matrix> inverse(const Matrix& m);

/// Basis of {x : m x = 0} in the canonical normalization: one vector per free
/// column (ascending), with entry 1 at that column.
std::vector<Vec> nullspace(const Matrix& m);

/// One solution of m x = rhs, or nullopt when inconsistent.
std::optional<Vec> solve(const Matrix& m, const Vec& rhs);

Matrix from_columns(const std::vector<Vec>& columns);

// ---- spans of matrices, used for algebra/Lie bases ------------------------

/// Canonical (reduced-echelon over flattened entries) basis of the span.
std::vector<Matrix> span_basis(const std::vector<Matrix>& generators);

bool span_contains(const std::vector<Matrix>& echelon_basis, const Matrix& candidate);

bool span_equal(const std::vector<Matrix>& a, const std::vector<Matrix>& b);

/// Coordinates of target in the given (independent) generators, if any.
std::optional<Vec> coordinates_in(const std::vector<Matrix>& generators, const Matrix& target);

}  // namespace hdform
