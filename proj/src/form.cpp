#include "hdform/form.hpp"

#include <algorithm>
#include <stdexcept>

namespace hdform {

namespace {

void check_index(const MultiIndex& idx, int dim, int degree) {
    if (static_cast<int>(idx.size()) != degree) throw std::invalid_argument("multi-index length mismatch");
    for (int i : idx)
        if (i < 1 || i > dim) throw std::invalid_argument("multi-index entry out of range");
}

Rational factorial(int n) {
    Rational f(1);
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// m_1! ... m_n! for the multiplicity vector of a sorted multi-index.
Rational multiplicity_factorial(const MultiIndex& idx) {
    Rational f(1);
    int run = 1;
    for (std::size_t i = 1; i <= idx.size(); ++i) {
        if (i < idx.size() && idx[i] == idx[i - 1]) {
            ++run;
        } else {
            f *= factorial(run);
            run = 1;
        }
    }
    return f;
}

ExponentVec index_to_exponents(const MultiIndex& idx, int dim) {
    ExponentVec e(dim, 0);
    for (int i : idx) ++e[i - 1];
    return e;
}

MultiIndex exponents_to_index(const ExponentVec& e) {
    MultiIndex idx;
    for (std::size_t v = 0; v < e.size(); ++v)
        for (int k = 0; k < e[v]; ++k) idx.push_back(static_cast<int>(v) + 1);
    return idx;
}

}  // namespace

SymmetricForm::SymmetricForm(int dim, int degree) : dim_(dim), degree_(degree) {
    if (dim < 1 || degree < 2) throw std::invalid_argument("form needs dim >= 1 and degree >= 2");
}

Rational SymmetricForm::entry(MultiIndex idx) const {
    std::sort(idx.begin(), idx.end());
    const auto it = entries_.find(idx);
    return it == entries_.end() ? Rational(0) : it->second;
}

void SymmetricForm::set_entry(const MultiIndex& idx, const Rational& value) {
    check_index(idx, dim_, degree_);
    if (!std::is_sorted(idx.begin(), idx.end())) throw std::invalid_argument("multi-index not sorted");
    if (value == 0)
        entries_.erase(idx);
    else
        entries_[idx] = value;
}

HomoPoly::HomoPoly(int dim, int degree) : dim_(dim), degree_(degree) {
    if (dim < 1 || degree < 1) throw std::invalid_argument("polynomial needs dim >= 1 and degree >= 1");
}

Rational HomoPoly::coeff(const ExponentVec& exponents) const {
    const auto it = terms_.find(exponents);
    return it == terms_.end() ? Rational(0) : it->second;
}

void HomoPoly::set_coeff(const ExponentVec& exponents, const Rational& value) {
    if (static_cast<int>(exponents.size()) != dim_) throw std::invalid_argument("exponent vector length mismatch");
    int sum = 0;
    for (int e : exponents) {
        if (e < 0) throw std::invalid_argument("negative exponent");
        sum += e;
    }
    if (sum != degree_) throw std::invalid_argument("exponent vector is not homogeneous of the right degree");
    if (value == 0)
        terms_.erase(exponents);
    else
        terms_[exponents] = value;
}

SymmetricForm polarize(const HomoPoly& p) {
    const Rational dfact = factorial(p.degree());
    SymmetricForm f(p.dim(), p.degree());
    for (const auto& [exps, coeff] : p.terms()) {
        const MultiIndex idx = exponents_to_index(exps);
        f.set_entry(idx, coeff * multiplicity_factorial(idx) / dfact);
    }
    return f;
}

HomoPoly associated_poly(const SymmetricForm& f) {
    const Rational dfact = factorial(f.degree());
    HomoPoly p(f.dim(), f.degree());
    for (const auto& [idx, value] : f.entries())
        p.set_coeff(index_to_exponents(idx, f.dim()), value * dfact / multiplicity_factorial(idx));
    return p;
}

Rational evaluate(const SymmetricForm& f, const std::vector<Vec>& vectors) {
    if (static_cast<int>(vectors.size()) != f.degree()) throw std::invalid_argument("evaluate needs degree-many vectors");
    for (const Vec& v : vectors)
        if (static_cast<int>(v.size()) != f.dim()) throw std::invalid_argument("vector length mismatch");
    // Contract one slot at a time: partial(J') = sum_i partial(sort(J'+i)) w[i],
    // keyed by sorted multi-indices of shrinking length.
    std::map<MultiIndex, Rational> partial(f.entries());
    for (const Vec& w : vectors) {
        std::map<MultiIndex, Rational> next;
        for (const auto& [idx, value] : partial) {
            for (std::size_t pos = 0; pos < idx.size(); ++pos) {
                if (pos > 0 && idx[pos] == idx[pos - 1]) continue;  // distinct values once
                const Rational& wi = w[idx[pos] - 1];
                if (wi == 0) continue;
                MultiIndex rest(idx);
                rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(pos));
                next[rest] += value * wi;
            }
        }
        partial = std::move(next);
    }
    const auto it = partial.find(MultiIndex{});
    return it == partial.end() ? Rational(0) : it->second;
}

SymmetricForm transform(const SymmetricForm& f, const Matrix& m) {
    if (m.rows() != f.dim()) throw std::invalid_argument("transform: matrix rows must match form dimension");
    const int target_dim = m.cols();
    // Keys are (transformed-slot indices | untransformed-slot indices), both
    // sorted. One slot moves per step; the new index j is appended as the
    // largest transformed index so each output key is built exactly once.
    using Key = std::pair<MultiIndex, MultiIndex>;
    std::map<Key, Rational> state;
    for (const auto& [idx, value] : f.entries()) state[{MultiIndex{}, idx}] = value;
    for (int step = 0; step < f.degree(); ++step) {
        std::map<Key, Rational> next;
        for (const auto& [key, value] : state) {
            const auto& [done, todo] = key;
            const int jmin = done.empty() ? 1 : done.back();
            for (std::size_t pos = 0; pos < todo.size(); ++pos) {
                if (pos > 0 && todo[pos] == todo[pos - 1]) continue;
                MultiIndex rest(todo);
                rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(pos));
                const int old_row = todo[pos] - 1;
                for (int j = jmin; j <= target_dim; ++j) {
                    const Rational& mij = m.at(old_row, j - 1);
                    if (mij == 0) continue;
                    MultiIndex grown(done);
                    grown.push_back(j);
                    next[{std::move(grown), rest}] += value * mij;
                }
            }
        }
        state = std::move(next);
    }
    SymmetricForm out(target_dim, f.degree());
    for (const auto& [key, value] : state)
        if (value != 0) out.set_entry(key.first, value);
    return out;
}

bool is_isometry(const SymmetricForm& f, const Matrix& m) {
    if (m.rows() != f.dim() || !m.is_square() || !is_invertible(m)) return false;
    return transform(f, m) == f;
}

SymmetricForm orthogonal_sum(const SymmetricForm& f1, const SymmetricForm& f2) {
    if (f1.degree() != f2.degree()) throw std::invalid_argument("orthogonal sum needs equal degrees");
    SymmetricForm out(f1.dim() + f2.dim(), f1.degree());
    for (const auto& [idx, value] : f1.entries()) out.set_entry(idx, value);
    for (const auto& [idx, value] : f2.entries()) {
        MultiIndex shifted(idx);
        for (int& i : shifted) i += f1.dim();
        out.set_entry(shifted, value);
    }
    return out;
}

std::vector<MultiIndex> sorted_multi_indices(int n, int k) {
    std::vector<MultiIndex> out;
    MultiIndex cur(k, 1);
    if (k == 0) {
        out.push_back({});
        return out;
    }
    while (true) {
        out.push_back(cur);
        int pos = k - 1;
        while (pos >= 0 && cur[pos] == n) --pos;
        if (pos < 0) break;
        ++cur[pos];
        for (int i = pos + 1; i < k; ++i) cur[i] = cur[pos];
    }
    return out;
}

}  // namespace hdform
