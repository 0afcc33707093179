#include "hdform/matrix.hpp"

#include <stdexcept>

namespace hdform {

Matrix::Matrix(int rows, int cols, std::initializer_list<long> values) : Matrix(rows, cols) {
    if (static_cast<std::size_t>(rows) * cols != values.size())
        throw std::invalid_argument("matrix literal size mismatch");
    std::size_t i = 0;
    for (long v : values) entries_[i++] = Rational(v);
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix Matrix::operator+(const Matrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("matrix shape mismatch");
    Matrix out(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] + other.entries_[i];
    return out;
}

Matrix Matrix::operator-(const Matrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("matrix shape mismatch");
    Matrix out(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] - other.entries_[i];
    return out;
}

Matrix Matrix::operator*(const Matrix& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix out(rows_, other.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rational& aik = at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < other.cols_; ++j) {
                const Rational& bkj = other.at(k, j);
                if (bkj != 0) out.at(i, j) += aik * bkj;
            }
        }
    return out;
}

Matrix Matrix::operator*(const Rational& scalar) const {
    Matrix out(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] * scalar;
    return out;
}

Vec Matrix::apply(const Vec& v) const {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("matrix/vector shape mismatch");
    Vec out(rows_, Rational(0));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != 0 && v[j] != 0) out[i] += at(i, j) * v[j];
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

Matrix Matrix::pow(int exponent) const {
    if (!is_square()) throw std::invalid_argument("power of non-square matrix");
    if (exponent < 0) throw std::invalid_argument("negative matrix power");
    Matrix acc = identity(rows_);
    for (int i = 0; i < exponent; ++i) acc = acc * *this;
    return acc;
}

Rational Matrix::trace() const {
    if (!is_square()) throw std::invalid_argument("trace of non-square matrix");
    Rational t(0);
    for (int i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

bool Matrix::is_zero() const {
    for (const auto& e : entries_)
        if (e != 0) return false;
    return true;
}

namespace {

struct Echelon {
    Matrix reduced;           // full size, zero rows at the bottom
    std::vector<int> pivots;  // pivot column per nonzero row
};

Echelon echelonize(Matrix m) {
    const int rows = m.rows(), cols = m.cols();
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int p = -1;
        for (int r = row; r < rows; ++r)
            if (m.at(r, col) != 0) {
                p = r;
                break;
            }
        if (p < 0) continue;
        if (p != row)
            for (int c = col; c < cols; ++c) std::swap(m.at(p, c), m.at(row, c));
        const Rational inv = Rational(1) / m.at(row, col);
        for (int c = col; c < cols; ++c)
            if (m.at(row, c) != 0) m.at(row, c) *= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == row) continue;
            const Rational f = m.at(r, col);
            if (f == 0) continue;
            for (int c = col; c < cols; ++c)
                if (m.at(row, c) != 0) m.at(r, c) -= f * m.at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

}  // namespace

Matrix rref(const Matrix& m) {
    Echelon e = echelonize(m);
    Matrix out(static_cast<int>(e.pivots.size()), m.cols());
    for (int r = 0; r < out.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) out.at(r, c) = e.reduced.at(r, c);
    return out;
}

int rank(const Matrix& m) { return static_cast<int>(echelonize(m).pivots.size()); }

bool is_invertible(const Matrix& m) { return m.is_square() && rank(m) == m.rows(); }

std::optional<Matrix> inverse(const Matrix& m) {
    if (!m.is_square()) return std::nullopt;
    const int n = m.rows();
    Matrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    Echelon e = echelonize(std::move(aug));
    if (static_cast<int>(e.pivots.size()) != n || e.pivots.back() != n - 1) return std::nullopt;
    Matrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = e.reduced.at(i, n + j);
    return inv;
}

std::vector<Vec> nullspace(const Matrix& m) {
    Echelon e = echelonize(m);
    const int cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (int p : e.pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        Vec v(cols, Rational(0));
        v[free] = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced.at(static_cast<int>(r), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vec> solve(const Matrix& m, const Vec& rhs) {
    if (static_cast<int>(rhs.size()) != m.rows()) throw std::invalid_argument("solve: rhs size mismatch");
    Matrix aug(m.rows(), m.cols() + 1);
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = rhs[i];
    }
    Echelon e = echelonize(std::move(aug));
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
        if (e.pivots[r] == m.cols()) return std::nullopt;  // 0 = 1 row
    Vec x(m.cols(), Rational(0));
    for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced.at(static_cast<int>(r), m.cols());
    return x;
}

Matrix from_columns(const std::vector<Vec>& columns) {
    if (columns.empty()) return Matrix();
    Matrix out(static_cast<int>(columns[0].size()), static_cast<int>(columns.size()));
    for (int j = 0; j < out.cols(); ++j) {
        if (columns[j].size() != columns[0].size()) throw std::invalid_argument("ragged columns");
        for (int i = 0; i < out.rows(); ++i) out.at(i, j) = columns[j][i];
    }
    return out;
}

namespace {

Matrix stack_flat(const std::vector<Matrix>& mats) {
    if (mats.empty()) return Matrix();
    const int n = static_cast<int>(mats[0].flat().size());
    Matrix rows(static_cast<int>(mats.size()), n);
    for (std::size_t i = 0; i < mats.size(); ++i) {
        if (static_cast<int>(mats[i].flat().size()) != n || mats[i].rows() != mats[0].rows())
            throw std::invalid_argument("span of mixed-shape matrices");
        for (int j = 0; j < n; ++j) rows.at(static_cast<int>(i), j) = mats[i].flat()[j];
    }
    return rows;
}

}  // namespace

std::vector<Matrix> span_basis(const std::vector<Matrix>& generators) {
    if (generators.empty()) return {};
    const Matrix reduced = rref(stack_flat(generators));
    std::vector<Matrix> basis;
    for (int r = 0; r < reduced.rows(); ++r) {
        Matrix m(generators[0].rows(), generators[0].cols());
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) m.at(i, j) = reduced.at(r, i * m.cols() + j);
        basis.push_back(std::move(m));
    }
    return basis;
}

bool span_contains(const std::vector<Matrix>& echelon_basis, const Matrix& candidate) {
    if (candidate.is_zero()) return true;
    if (echelon_basis.empty()) return false;
    std::vector<Matrix> all = echelon_basis;
    all.push_back(candidate);
    return static_cast<int>(span_basis(all).size()) == static_cast<int>(echelon_basis.size());
}

bool span_equal(const std::vector<Matrix>& a, const std::vector<Matrix>& b) {
    return span_basis(a) == span_basis(b);
}

std::optional<Vec> coordinates_in(const std::vector<Matrix>& generators, const Matrix& target) {
    if (generators.empty()) return target.is_zero() ? std::optional<Vec>(Vec{}) : std::nullopt;
    const int n = static_cast<int>(generators[0].flat().size());
    Matrix cols(n, static_cast<int>(generators.size()));
    for (std::size_t j = 0; j < generators.size(); ++j)
        for (int i = 0; i < n; ++i) cols.at(i, static_cast<int>(j)) = generators[j].flat()[i];
    Vec rhs(target.flat());
    return solve(cols, rhs);
}

}  // namespace hdform
